//! Command implementations behind the binary. Each command turns a job
//! configuration into a [`Report`]; rendering, output paths, and exit
//! codes stay in the binary so everything here is directly testable.

use crate::config::{ConfigError, JobConfig, ReportFormat};
use crate::gkm::{
    sector_table, stringy_product, verify_product_by_localization, EquivariantClass, GKMError,
    GKMGraph,
};
use crate::rational::{format_rat, rat_int, Rat};
use crate::reduction::{shift_discrepancy, ReductionError};
use crate::report::{Payload, ProductPayload, Report, SectorRow, VerifyPayload, VertexValue};
use crate::root_datum::{
    enumerate_torus_elements, CommutingTuple, RootDatumError, TorusElement,
};
use crate::suite::{run_suite, SuiteError};
use crate::weights::{degree_shift, WeightError, WeightRep};
use num::Zero;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Gkm(#[from] GKMError),
    #[error(transparent)]
    Datum(#[from] RootDatumError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Sectors,
    Product,
    Verify,
    Report,
}

pub fn run(kind: CommandKind, config: &JobConfig) -> Result<Report, CliError> {
    let payload = match kind {
        CommandKind::Sectors => Payload::Sectors {
            rows: sector_rows(config)?,
        },
        CommandKind::Product => Payload::Product(product_payload(config)?),
        CommandKind::Verify => Payload::Verify(verify_payload(config)?),
        CommandKind::Report => {
            let mut parts = vec![Payload::Sectors {
                rows: sector_rows(config)?,
            }];
            if !config.classes.is_empty() {
                parts.push(Payload::Product(product_payload(config)?));
            }
            parts.push(Payload::Verify(verify_payload(config)?));
            Payload::Combined { parts }
        }
    };
    let command = match kind {
        CommandKind::Sectors => "sectors",
        CommandKind::Product => "product",
        CommandKind::Verify => "verify",
        CommandKind::Report => "report",
    };
    Ok(Report::new(command, config, payload))
}

pub fn render(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
    }
}

/// Sector table rows. With a fixed-point graph the rows are the graph's
/// sectors up to `max_order`; with a group they are Weyl-canonical torus
/// points carrying shift and centralizer data; with neither, the single
/// identity sector of a trivial action.
fn sector_rows(config: &JobConfig) -> Result<Vec<SectorRow>, CliError> {
    if let Some(graph) = config.build_graph()? {
        let table = sector_table(&graph, config.max_order())?;
        let rows = table
            .sectors()
            .iter()
            .map(|s| SectorRow {
                sector: s.element().to_string(),
                components: Some(s.components().len() as u64),
                shifts: (0..s.components().len())
                    .map(|c| format_rat(s.shift(c)))
                    .collect(),
                fixed_dims: (0..s.components().len()).map(|c| s.fixed_dim(c)).collect(),
                ..Default::default()
            })
            .collect();
        return Ok(rows);
    }
    if let Some(datum) = config.build_datum()? {
        let rep = match config.build_weight_rep()? {
            Some(rep) => rep,
            None => WeightRep::adjoint(&datum),
        };
        let contrast = config.build_contrast_datum()?;
        let mut canonical = BTreeSet::new();
        for t in enumerate_torus_elements(datum.rank(), config.max_order()) {
            canonical.insert(datum.weyl_canonical(&t)?);
        }
        let mut rows = Vec::with_capacity(canonical.len());
        for t in canonical {
            let centralizer = datum.centralizer(&CommutingTuple::single(t.clone()))?;
            let contrast_discrepancy = match &contrast {
                None => None,
                Some(c) => {
                    let padded = zero_pad(&t, c.rank());
                    Some(format_rat(&shift_discrepancy(c, &padded)?))
                }
            };
            rows.push(SectorRow {
                sector: t.to_string(),
                components: None,
                shifts: vec![format_rat(&degree_shift(&rep, &t)?)],
                fixed_dims: vec![rep.fixed_lines(&t)?.dim()],
                centralizer_dim: Some(centralizer.dim()),
                shift_discrepancy: Some(format_rat(&shift_discrepancy(&datum, &t)?)),
                contrast_discrepancy,
            });
        }
        return Ok(rows);
    }
    Ok(vec![SectorRow {
        sector: "1".to_string(),
        components: Some(1),
        shifts: vec!["0".to_string()],
        fixed_dims: vec![0],
        ..Default::default()
    }])
}

fn zero_pad(t: &TorusElement, rank: usize) -> TorusElement {
    let mut entries = t.entries().to_vec();
    entries.resize(rank, Rat::zero());
    TorusElement::new(entries).expect("padding preserves reduced entries")
}

/// Product of the two configured classes, with the localization oracle
/// cross-check and a top-degree audit.
fn product_payload(config: &JobConfig) -> Result<ProductPayload, CliError> {
    let graph = config
        .build_graph()?
        .ok_or_else(|| CliError::Usage("product needs space.gkm in the config".into()))?;
    if config.classes.len() != 2 {
        return Err(CliError::Usage(format!(
            "product needs exactly two classes, found {}",
            config.classes.len()
        )));
    }
    let a = config.build_class(&config.classes[0], &graph)?;
    let b = config.build_class(&config.classes[1], &graph)?;
    let product = stringy_product(&graph, &a, &b)?;
    let oracle_confirmed = verify_product_by_localization(&graph, &a, &b, &product)?;

    let da = shifted_top_degree(&graph, &a)?;
    let db = shifted_top_degree(&graph, &b)?;
    let dp = shifted_top_degree(&graph, &product)?;
    // Top shifted degrees obey deg(a ⋆ b) ≤ deg a + deg b, with strict
    // inequality only when leading terms cancel. Zero classes carry
    // every degree, so they pass vacuously.
    let degree_identity = match (&da, &db, &dp) {
        (Some(da), Some(db), Some(dp)) => *dp <= da + db,
        _ => true,
    };
    let degree_string =
        |d: &Option<Rat>| d.as_ref().map(|x| format_rat(x)).unwrap_or_else(|| "zero".into());

    Ok(ProductPayload {
        left_sector: a.element().to_string(),
        right_sector: b.element().to_string(),
        product_sector: product.element().to_string(),
        values: (0..graph.vertex_count())
            .map(|v| VertexValue {
                vertex: graph.vertex_name(v).to_string(),
                value: product.value(v).to_string(),
            })
            .collect(),
        degrees: vec![degree_string(&da), degree_string(&db), degree_string(&dp)],
        oracle_confirmed,
        degree_identity,
    })
}

/// Largest shifted cohomological degree carried by the class: per vertex,
/// twice the polynomial degree plus twice the component's shift. `None`
/// for the zero class.
fn shifted_top_degree(
    graph: &GKMGraph,
    class: &EquivariantClass,
) -> Result<Option<Rat>, CliError> {
    let sector = graph.sector(class.element())?;
    let mut top: Option<Rat> = None;
    for (v, value) in class.values().iter().enumerate() {
        if let Some(d) = value.total_degree() {
            let shift = sector.shift(sector.component_of(v));
            let degree = rat_int(2 * d as i64) + rat_int(2) * shift;
            if top.as_ref().map(|t| degree > *t).unwrap_or(true) {
                top = Some(degree);
            }
        }
    }
    Ok(top)
}

/// An absent suite section means the full default suite. A suite section
/// with an empty check list runs nothing and passes trivially, so a
/// config can opt out of verification explicitly.
fn verify_payload(config: &JobConfig) -> Result<VerifyPayload, CliError> {
    let rows = match &config.suite {
        None => run_suite(&[], None, config.seed())?,
        Some(spec) if spec.checks.is_empty() => Vec::new(),
        Some(spec) => run_suite(&spec.checks, spec.instances, config.seed())?,
    };
    Ok(VerifyPayload::from_checks(rows))
}
