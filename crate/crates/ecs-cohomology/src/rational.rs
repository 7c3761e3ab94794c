//! Exact rational scalars and the `"p/q"` wire format.
//!
//! Every quantity in this crate that is not a literal integer is a
//! [`Rat`] (arbitrary-precision rational). Floating point is never used.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt::Write as _;

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Fractional part in `[0, 1)`: `x - floor(x)`.
pub fn frac_mod1(x: &Rat) -> Rat {
    x - x.floor()
}

/// True iff `x` has denominator 1.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Parse `"p/q"` or a bare integer `"p"`. Whitespace is not accepted.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.parse::<BigInt>()
            .map_err(|_| format!("invalid integer {t:?} in rational"))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(format!("zero denominator in rational {s:?}"));
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
    }
}

/// Canonical wire form: reduced, `"p"` for integers, `"p/q"` with `q > 1` otherwise.
pub fn format_rat(x: &Rat) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Least common multiple of the denominators of `xs` (1 for an empty slice).
pub fn denominator_lcm(xs: &[Rat]) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        l = num::integer::lcm(l, x.denom().abs());
    }
    l
}

/// Comma-joined canonical forms, used for report keys.
pub fn format_rat_list(xs: &[Rat]) -> String {
    let mut out = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{}", format_rat(x));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_mod1_lands_in_unit_interval() {
        assert_eq!(frac_mod1(&rat(-1, 4)), rat(3, 4));
        assert_eq!(frac_mod1(&rat(7, 3)), rat(1, 3));
        assert_eq!(frac_mod1(&rat_int(-2)), rat_int(0));
        assert_eq!(frac_mod1(&rat(5, 5)), rat_int(0));
    }

    #[test]
    fn wire_format_round_trips() {
        for s in ["0", "-3", "1/2", "-7/3", "12"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
        assert_eq!(format_rat(&parse_rat("2/4").unwrap()), "1/2");
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/2").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn denominator_lcm_over_mixed_entries() {
        let xs = [rat(1, 4), rat(5, 6), rat_int(7)];
        assert_eq!(denominator_lcm(&xs), BigInt::from(12));
        assert_eq!(denominator_lcm(&[]), BigInt::from(1));
    }
}
