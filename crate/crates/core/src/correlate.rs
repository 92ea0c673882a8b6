//! Per-class index tables with Kendall rank correlations between the indices.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::canon::CanonicalKey;
use crate::enumeration::{unicyclic, ClassFilter};
use crate::error::Result;
use crate::invariants::invariant_bundle;
use crate::parallel::par_map;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub key: CanonicalKey,
    pub order: usize,
    pub subtrees: BigUint,
    pub wiener: BigUint,
    pub sigma: BigUint,
    pub hosoya: BigUint,
}

pub const COLUMNS: [&str; 4] = ["subtrees", "wiener", "sigma", "hosoya"];

impl Row {
    fn column(&self, i: usize) -> &BigUint {
        match i {
            0 => &self.subtrees,
            1 => &self.wiener,
            2 => &self.sigma,
            _ => &self.hosoya,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub rows: Vec<Row>,
    /// `(column a, column b, tau_b)` for each unordered pair; `None` when a
    /// column is constant.
    pub correlations: Vec<(&'static str, &'static str, Option<f64>)>,
}

/// Kendall's tau-b, with tie correction. `None` if either side is constant.
pub fn kendall_tau_b<T: Ord>(xs: &[T], ys: &[T]) -> Option<f64> {
    assert_eq!(xs.len(), ys.len());
    let (mut concordant, mut discordant, mut tied_x, mut tied_y) = (0i64, 0i64, 0i64, 0i64);
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let (a, b) = (xs[i].cmp(&xs[j]), ys[i].cmp(&ys[j]));
            if a == Ordering::Equal {
                tied_x += 1;
            }
            if b == Ordering::Equal {
                tied_y += 1;
            }
            if a != Ordering::Equal && b != Ordering::Equal {
                if a == b {
                    concordant += 1;
                } else {
                    discordant += 1;
                }
            }
        }
    }
    let pairs = (xs.len() * xs.len().saturating_sub(1) / 2) as i64;
    let denom = ((pairs - tied_x) as f64 * (pairs - tied_y) as f64).sqrt();
    (denom > 0.0).then(|| (concordant - discordant) as f64 / denom)
}

/// Evaluate every member of the class and correlate the four indices.
pub fn correlation_table(filter: &ClassFilter, workers: usize) -> Result<Table> {
    let members = unicyclic(filter)?;
    let rows = par_map(&members, workers, |m| {
        invariant_bundle(&m.graph).map(|b| Row {
            key: m.key.clone(),
            order: m.graph.vertex_count(),
            subtrees: b.subtree_total,
            wiener: b.wiener,
            sigma: b.merrifield_simmons,
            hosoya: b.hosoya,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut correlations = Vec::new();
    for a in 0..COLUMNS.len() {
        for b in a + 1..COLUMNS.len() {
            let xs: Vec<&BigUint> = rows.iter().map(|r| r.column(a)).collect();
            let ys: Vec<&BigUint> = rows.iter().map(|r| r.column(b)).collect();
            correlations.push((COLUMNS[a], COLUMNS[b], kendall_tau_b(&xs, &ys)));
        }
    }
    Ok(Table { rows, correlations })
}

impl Table {
    /// CSV with a header row; correlations follow as `#`-prefixed footer lines
    /// rendered to six decimal places.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("key,order,subtrees,wiener,sigma,hosoya\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{},{}", r.key.to_hex(), r.order, r.subtrees, r.wiener, r.sigma, r.hosoya);
        }
        for (a, b, tau) in &self.correlations {
            let shown = tau.map_or_else(|| "undefined".to_string(), |t| format!("{t:.6}"));
            let _ = writeln!(out, "# kendall_tau_b,{a},{b},{shown}");
        }
        out
    }

    /// Rows attaining the maximum (or minimum) of a column.
    pub fn extremal_rows(&self, column: &str, max: bool) -> Vec<&Row> {
        let Some(i) = COLUMNS.iter().position(|c| *c == column) else {
            return Vec::new();
        };
        let pick = if max { self.rows.iter().map(|r| r.column(i)).max() } else { self.rows.iter().map(|r| r.column(i)).min() };
        match pick {
            Some(best) => self.rows.iter().filter(|r| r.column(i) == best).collect(),
            None => Vec::new(),
        }
    }
}
