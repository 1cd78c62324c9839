//! Orthogonality of exponential families via the difference-set criterion
//! `Lambda - Lambda ⊆ Z_D ∪ {0}`, the separation radius, the packing bound,
//! and an empirical density (max-gap) diagnostic.

use crate::domains::{zero_set, Domain, DomainKind, ZeroSetDescription};
use crate::error::{Error, Result};
use crate::points::{euclidean, norm, sub, PointSet};
use serde::Serialize;

/// One pair that violates the orthogonality criterion.
#[derive(Debug, Clone, Serialize)]
pub struct FailingPair {
    pub i: usize,
    pub j: usize,
    pub distance: f64,
    pub zero_set_distance: f64,
}

/// Verdict plus per-pair diagnostics for the criterion.
#[derive(Debug, Clone, Serialize)]
pub struct OrthoReport {
    pub domain: String,
    pub label: String,
    pub verdict: bool,
    pub failing_pairs: Vec<FailingPair>,
    pub min_pairwise_distance: f64,
    pub separation_radius_used: f64,
    pub pair_count: usize,
    pub tol: f64,
}

impl OrthoReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Test every unordered pair of `lambda_set` against Z_D ∪ {0}.
///
/// Cube sets with exact-rational coordinates use the exact arithmetic test
/// (a coordinate of the difference is a nonzero integer); everything else
/// uses tolerance membership. Ball membership tolerance scales as
/// `tol * max(1, |diff|)`.
pub fn check_orthogonal(domain: Domain, lambda_set: &PointSet, tol: f64) -> Result<OrthoReport> {
    if lambda_set.dimension() != domain.dimension() {
        return Err(Error::DimensionMismatch {
            expected: domain.dimension(),
            got: lambda_set.dimension(),
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    let zs = match domain.kind() {
        DomainKind::UnitCube => zero_set(domain, 1.0)?,
        DomainKind::UnitBall => {
            let horizon = lambda_set.diameter().max(1.0) + 1.0;
            zero_set(domain, horizon)?
        }
    };
    check_orthogonal_with(domain, lambda_set, tol, &zs)
}

/// As `check_orthogonal`, with a caller-provided zero set (its horizon must
/// cover the set's diameter).
pub fn check_orthogonal_with(
    domain: Domain,
    lambda_set: &PointSet,
    tol: f64,
    zs: &ZeroSetDescription,
) -> Result<OrthoReport> {
    let pts = lambda_set.float_points();
    let exact = lambda_set.exact_points();
    let use_exact = domain.kind() == DomainKind::UnitCube && exact.is_some();

    let mut failing = Vec::new();
    let mut min_dist = f64::INFINITY;
    let mut pair_count = 0usize;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            pair_count += 1;
            let diff = sub(&pts[i], &pts[j]);
            let dist = norm(&diff);
            min_dist = min_dist.min(dist);
            let ok = if use_exact {
                let e = exact.unwrap();
                let ediff: Vec<_> = e[i]
                    .iter()
                    .zip(&e[j])
                    .map(|(a, b)| a - b)
                    .collect();
                zs.contains_exact(&ediff)?
            } else {
                let tol_eff = match domain.kind() {
                    DomainKind::UnitBall => tol * dist.max(1.0),
                    DomainKind::UnitCube => tol,
                };
                zs.contains(&diff, tol_eff)?
            };
            if !ok {
                failing.push(FailingPair {
                    i,
                    j,
                    distance: crate::round15(dist),
                    zero_set_distance: crate::round15(zs.distance_to(&diff)?),
                });
            }
        }
    }
    Ok(OrthoReport {
        domain: domain.to_string(),
        label: lambda_set.label().to_string(),
        verdict: failing.is_empty(),
        failing_pairs: failing,
        min_pairwise_distance: crate::round15(if min_dist.is_finite() { min_dist } else { 0.0 }),
        separation_radius_used: crate::round15(separation_radius(domain)?),
        pair_count,
        tol,
    })
}

/// inf { |xi| : transform(xi) = 0 }: exactly 1 for the cube, the first
/// Bessel-root radius for the ball.
pub fn separation_radius(domain: Domain) -> Result<f64> {
    match domain.kind() {
        DomainKind::UnitCube => Ok(1.0),
        DomainKind::UnitBall => {
            let nu = domain.dimension() as f64 / 2.0;
            let mut horizon = (nu + 5.0) / (2.0 * std::f64::consts::PI);
            for _ in 0..16 {
                let zs = zero_set(domain, horizon)?;
                if let Some(r) = zs.smallest_radius() {
                    return Ok(r);
                }
                horizon *= 2.0;
            }
            Err(Error::RefinementFailed(horizon))
        }
    }
}

/// Outcome of the volume-packing check behind the `#(Λ ∩ B(R)) ≤ C R^d` bound.
#[derive(Debug, Clone, Serialize)]
pub struct PackingReport {
    pub count: usize,
    pub bound: f64,
    pub min_pairwise_distance: f64,
    pub min_distance_ok: bool,
    pub count_ok: bool,
    pub ok: bool,
}

/// Check that the set is r-separated and that its cardinality respects the
/// disjoint-balls volume bound `((R + r/2) / (r/2))^d`.
pub fn packing_bound_check(lambda_set: &PointSet, big_r: f64, r: f64) -> Result<PackingReport> {
    if !(big_r > 0.0 && r > 0.0) {
        return Err(Error::InvalidArgument(
            "packing check needs R > 0 and r > 0".into(),
        ));
    }
    let pts = lambda_set.float_points();
    for p in &pts {
        if norm(p) > big_r + 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "point at norm {} lies outside B({big_r})",
                norm(p)
            )));
        }
    }
    let mut min_dist = f64::INFINITY;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            min_dist = min_dist.min(euclidean(&pts[i], &pts[j]));
        }
    }
    let d = lambda_set.dimension() as f64;
    let bound = ((big_r + r / 2.0) / (r / 2.0)).powf(d);
    let min_distance_ok = pts.len() < 2 || min_dist >= r;
    let count_ok = (pts.len() as f64) <= bound;
    Ok(PackingReport {
        count: pts.len(),
        bound,
        min_pairwise_distance: if min_dist.is_finite() { min_dist } else { 0.0 },
        min_distance_ok,
        count_ok,
        ok: min_distance_ok && count_ok,
    })
}

/// Grid approximation of the largest empty-ball radius around points of the
/// set within `B(region_radius)`.
#[derive(Debug, Clone, Serialize)]
pub struct GapEstimate {
    pub gap: f64,
    /// The grid resolves the supremum to within grid_step * sqrt(d).
    pub grid_error_bound: f64,
}

/// Sup over grid centers c in B(region_radius) of the distance from c to the
/// nearest set point. A true spectrum keeps this bounded as the region grows.
pub fn max_gap_radius(
    lambda_set: &PointSet,
    region_radius: f64,
    grid_step: f64,
) -> Result<GapEstimate> {
    if lambda_set.is_empty() {
        return Err(Error::InvalidArgument(
            "max_gap_radius needs a nonempty point set".into(),
        ));
    }
    if !(grid_step > 0.0 && grid_step < region_radius) {
        return Err(Error::InvalidArgument(
            "need 0 < grid_step < region_radius".into(),
        ));
    }
    let d = lambda_set.dimension();
    let pts = lambda_set.float_points();
    let steps = (2.0 * region_radius / grid_step).floor() as usize + 1;
    let mut idx = vec![0usize; d];
    let mut center = vec![0.0f64; d];
    let mut best = 0.0f64;
    loop {
        for (k, c) in center.iter_mut().enumerate() {
            *c = -region_radius + idx[k] as f64 * grid_step;
        }
        if norm(&center) <= region_radius {
            let nearest = pts
                .iter()
                .map(|p| euclidean(p, &center))
                .fold(f64::INFINITY, f64::min);
            best = best.max(nearest);
        }
        // odometer over the d-dimensional grid
        let mut k = 0;
        loop {
            idx[k] += 1;
            if idx[k] < steps {
                break;
            }
            idx[k] = 0;
            k += 1;
            if k == d {
                return Ok(GapEstimate {
                    gap: best,
                    grid_error_bound: grid_step * (d as f64).sqrt(),
                });
            }
        }
    }
}
