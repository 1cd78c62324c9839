//! Distinct-distance counting (exact rational or tolerance-clustered),
//! the Erdős-type lower-bound evaluators, and the check that distances of
//! ball-orthogonal sets sit on Bessel-root radii.

use crate::domains::ZeroSetDescription;
use crate::error::{Error, Result};
use crate::points::{euclidean, PointSet};
use num::rational::BigRational;
use num::ToPrimitive;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceMode {
    /// Compare squared distances as reduced rationals; no tolerance at all.
    Exact,
    /// Sort Euclidean distances and single-linkage merge values closer
    /// than the tolerance.
    Clustered(f64),
}

#[derive(Debug, Clone)]
pub enum DistanceValues {
    /// Ascending exact squared distances.
    ExactSquared(Vec<BigRational>),
    /// Ascending cluster representatives (Euclidean, not squared).
    Clustered(Vec<f64>),
}

#[derive(Debug, Clone)]
pub struct DistanceSummary {
    values: DistanceValues,
    multiplicities: Vec<usize>,
}

impl DistanceSummary {
    pub fn distinct_count(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn values(&self) -> &DistanceValues {
        &self.values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Euclidean view of the distinct values (square roots in exact mode).
    pub fn euclidean_values(&self) -> Vec<f64> {
        match &self.values {
            DistanceValues::ExactSquared(v) => v
                .iter()
                .map(|q| q.to_f64().unwrap_or(f64::NAN).sqrt())
                .collect(),
            DistanceValues::Clustered(v) => v.clone(),
        }
    }

    /// CSV `value,multiplicity`; a leading comment flags whether values are
    /// exact squared rationals or clustered Euclidean floats.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.values {
            DistanceValues::ExactSquared(v) => {
                out.push_str("# values=squared-rational\n");
                out.push_str("value,multiplicity\n");
                for (q, m) in v.iter().zip(&self.multiplicities) {
                    if q.is_integer() {
                        out.push_str(&format!("{},{m}\n", q.numer()));
                    } else {
                        out.push_str(&format!("{}/{},{m}\n", q.numer(), q.denom()));
                    }
                }
            }
            DistanceValues::Clustered(v) => {
                out.push_str("# values=euclidean-float\n");
                out.push_str("value,multiplicity\n");
                for (x, m) in v.iter().zip(&self.multiplicities) {
                    out.push_str(&format!("{},{m}\n", crate::fmt15(*x)));
                }
            }
        }
        out
    }
}

/// Reduce the pairwise distance multiset of `points` to distinct values
/// with multiplicities.
pub fn distinct_distances(points: &PointSet, mode: DistanceMode) -> Result<DistanceSummary> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument(
            "distinct_distances needs at least two points".into(),
        ));
    }
    match mode {
        DistanceMode::Exact => {
            let pts = points.exact_points().ok_or_else(|| {
                Error::ExactModeUnavailable(format!(
                    "point set {:?} has floating coordinates",
                    points.label()
                ))
            })?;
            let mut counts: BTreeMap<BigRational, usize> = BTreeMap::new();
            for i in 0..pts.len() {
                for j in (i + 1)..pts.len() {
                    let mut q = BigRational::from_integer(0.into());
                    for (a, b) in pts[i].iter().zip(&pts[j]) {
                        let d = a - b;
                        q += &d * &d;
                    }
                    *counts.entry(q).or_insert(0) += 1;
                }
            }
            let (values, multiplicities) = counts.into_iter().unzip();
            Ok(DistanceSummary {
                values: DistanceValues::ExactSquared(values),
                multiplicities,
            })
        }
        DistanceMode::Clustered(tol) => {
            if !(tol > 0.0) {
                return Err(Error::InvalidArgument(
                    "clustering tolerance must be positive".into(),
                ));
            }
            let pts = points.float_points();
            let mut dists = Vec::with_capacity(pts.len() * (pts.len() - 1) / 2);
            for i in 0..pts.len() {
                for j in (i + 1)..pts.len() {
                    dists.push(euclidean(&pts[i], &pts[j]));
                }
            }
            dists.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut values = Vec::new();
            let mut multiplicities = Vec::new();
            let mut start = 0usize;
            for k in 1..=dists.len() {
                if k == dists.len() || dists[k] - dists[k - 1] > tol {
                    let cluster = &dists[start..k];
                    values.push(cluster.iter().sum::<f64>() / cluster.len() as f64);
                    multiplicities.push(cluster.len());
                    start = k;
                }
            }
            Ok(DistanceSummary {
                values: DistanceValues::Clustered(values),
                multiplicities,
            })
        }
    }
}

/// Theorem-2-style lower bound n^{3/(3d-2)} with unit constant.
pub fn erdos_bound(d: usize, n: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidArgument("erdos_bound needs d >= 2".into()));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("erdos_bound needs n >= 1".into()));
    }
    let e = 3.0 / (3.0 * d as f64 - 2.0);
    Ok((n as f64).powf(e))
}

/// Distance demand of a candidate spectrum: (c R^d)^{3/(3d-2)}.
pub fn spectrum_distance_demand(d: usize, big_r: f64, density_constant: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidArgument(
            "spectrum_distance_demand needs d >= 2".into(),
        ));
    }
    if !(big_r > 0.0 && density_constant > 0.0) {
        return Err(Error::InvalidArgument(
            "spectrum_distance_demand needs R > 0 and a positive constant".into(),
        ));
    }
    let e = 3.0 / (3.0 * d as f64 - 2.0);
    Ok((density_constant * big_r.powi(d as i32)).powf(e))
}

/// Per-distance outcome of matching distinct distances against root radii.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RootMatchReport {
    pub distinct_count: usize,
    pub matched_count: usize,
    pub unmatched: Vec<f64>,
    pub roots_up_to_diameter: usize,
    pub all_matched: bool,
}

/// For a candidate ball-orthogonal set, confirm every distinct pairwise
/// distance lies within tol of an enumerated root radius.
pub fn verify_distances_are_roots(
    points: &PointSet,
    zs: &ZeroSetDescription,
    tol: f64,
) -> Result<RootMatchReport> {
    let radii = zs.root_radii().ok_or_else(|| {
        Error::Unsupported("verify_distances_are_roots needs a ball zero set".into())
    })?;
    let diameter = points.diameter();
    if points.len() >= 2 {
        if let ZeroSetDescription::BallSpheres { horizon, .. } = zs {
            if diameter > *horizon {
                return Err(Error::HorizonExceeded {
                    radius: diameter,
                    horizon: *horizon,
                });
            }
        }
    }
    let distinct = if points.len() < 2 {
        Vec::new()
    } else {
        distinct_distances(points, DistanceMode::Clustered(tol))?.euclidean_values()
    };
    let mut unmatched = Vec::new();
    for &v in &distinct {
        let hit = radii.iter().any(|r| (r - v).abs() <= tol * v.max(1.0));
        if !hit {
            unmatched.push(crate::round15(v));
        }
    }
    let roots_up_to_diameter = radii.iter().filter(|r| **r <= diameter + tol).count();
    Ok(RootMatchReport {
        distinct_count: distinct.len(),
        matched_count: distinct.len() - unmatched.len(),
        all_matched: unmatched.is_empty(),
        unmatched,
        roots_up_to_diameter,
    })
}

/// Families the small-case explorer can draw configurations from.
#[derive(Debug, Clone, Copy)]
pub enum ConfigGenerator {
    RegularPolygon,
    /// All n-subsets of the m x m integer grid.
    GridSubsets(usize),
}

#[derive(Debug, Clone)]
pub struct MinDistinctOutcome {
    pub points: PointSet,
    pub distinct_count: usize,
}

/// Explore a finite configuration family and return the member with the
/// fewest distinct distances: an upper bound on g_2(n), not a certified
/// minimum over the plane.
pub fn min_distinct_search(n: usize, generator: ConfigGenerator) -> Result<MinDistinctOutcome> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "min_distinct_search needs n >= 2".into(),
        ));
    }
    match generator {
        ConfigGenerator::RegularPolygon => {
            if n < 3 {
                return Err(Error::InvalidArgument("a polygon needs n >= 3".into()));
            }
            let pts: Vec<Vec<f64>> = (0..n)
                .map(|k| {
                    let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                    vec![th.cos(), th.sin()]
                })
                .collect();
            let points = PointSet::from_float(2, pts, format!("regular-{n}-gon"))?;
            let count = distinct_distances(&points, DistanceMode::Clustered(1e-9))?
                .distinct_count();
            Ok(MinDistinctOutcome {
                points,
                distinct_count: count,
            })
        }
        ConfigGenerator::GridSubsets(m) => {
            if n > 12 {
                return Err(Error::BudgetExceeded(
                    "GridSubsets is limited to n <= 12".into(),
                ));
            }
            let cells = m * m;
            if cells < n {
                return Err(Error::InvalidArgument(format!(
                    "grid {m}x{m} has fewer than {n} points"
                )));
            }
            if binomial(cells, n) > 10_000_000 {
                return Err(Error::BudgetExceeded(format!(
                    "C({cells},{n}) subsets exceed the enumeration budget"
                )));
            }
            let grid: Vec<(i64, i64)> = (0..m as i64)
                .flat_map(|x| (0..m as i64).map(move |y| (x, y)))
                .collect();
            let mut best: Option<(usize, Vec<usize>)> = None;
            let mut chosen = Vec::with_capacity(n);
            subsets(&grid, n, 0, &mut chosen, &mut best);
            let (count, idx) = best.expect("at least one subset exists");
            let pts: Vec<Vec<f64>> = idx
                .iter()
                .map(|&i| vec![grid[i].0 as f64, grid[i].1 as f64])
                .collect();
            let points = PointSet::from_float(2, pts, format!("grid-{m}x{m}-best-{n}"))?;
            Ok(MinDistinctOutcome {
                points,
                distinct_count: count,
            })
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn subsets(
    grid: &[(i64, i64)],
    n: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    best: &mut Option<(usize, Vec<usize>)>,
) {
    if chosen.len() == n {
        let mut seen = std::collections::BTreeSet::new();
        for (a, &i) in chosen.iter().enumerate() {
            for &j in &chosen[a + 1..] {
                let dx = grid[i].0 - grid[j].0;
                let dy = grid[i].1 - grid[j].1;
                seen.insert(dx * dx + dy * dy);
            }
        }
        let count = seen.len();
        if best.as_ref().map_or(true, |(c, _)| count < *c) {
            *best = Some((count, chosen.clone()));
        }
        return;
    }
    let need = n - chosen.len();
    for i in from..=grid.len().saturating_sub(need) {
        chosen.push(i);
        subsets(grid, n, i + 1, chosen, best);
        chosen.pop();
    }
}
