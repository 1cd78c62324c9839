//! Report types behind the command-line front end, chiefly the
//! contradiction table: available distances grow linearly in R (Bessel
//! roots) while the demand of a candidate spectrum grows like
//! R^{3d/(3d-2)}, so the ratio must decay.

use crate::distances::spectrum_distance_demand;
use crate::error::{Error, Result};
use crate::specfun::{bessel_zeros, Order};
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Serialize)]
pub struct ContradictionRow {
    pub r: f64,
    /// Number of root radii <= 2R, i.e. distances available to an
    /// orthogonal set inside B(R).
    pub available_distances: usize,
    /// (c R^d)^{3/(3d-2)}, the distinct-distance demand of a spectrum.
    pub demanded_distances: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContradictionTable {
    pub dimension: usize,
    pub density_constant: f64,
    pub rows: Vec<ContradictionRow>,
    /// Least-squares slope of available_distances against R (through the
    /// origin): the concrete C' of the linear zero-count bound.
    pub fitted_slope: f64,
}

impl ContradictionTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("R,available_distances,demanded_distances,ratio\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                crate::fmt15(row.r),
                row.available_distances,
                crate::fmt15(row.demanded_distances),
                crate::fmt15(row.ratio)
            ));
        }
        out.push_str(&format!("# fitted_slope={}\n", crate::fmt15(self.fitted_slope)));
        out
    }
}

/// Build the contradiction table for ascending radii.
pub fn contradiction_table(
    d: usize,
    r_list: &[f64],
    density_constant: f64,
) -> Result<ContradictionTable> {
    if d < 2 {
        return Err(Error::InvalidArgument(
            "the contradiction experiment needs d >= 2".into(),
        ));
    }
    if r_list.iter().any(|r| !(*r > 0.0)) {
        return Err(Error::InvalidArgument("radii must be positive".into()));
    }
    if r_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("radii must be strictly ascending".into()));
    }
    let mut rows = Vec::new();
    if let Some(&max_r) = r_list.last() {
        // one zero table at the largest horizon serves every row
        let order = Order::from_dimension(d)?;
        let table = bessel_zeros(order, 2.0 * PI * 2.0 * max_r)?;
        for &r in r_list {
            let limit = 2.0 * PI * 2.0 * r;
            let available = table.zeros().partition_point(|z| *z <= limit);
            let demanded = spectrum_distance_demand(d, r, density_constant)?;
            rows.push(ContradictionRow {
                r,
                available_distances: available,
                demanded_distances: crate::round15(demanded),
                ratio: crate::round15(available as f64 / demanded),
            });
        }
    }
    let num: f64 = rows.iter().map(|w| w.available_distances as f64 * w.r).sum();
    let den: f64 = rows.iter().map(|w| w.r * w.r).sum();
    let fitted_slope = if den > 0.0 { num / den } else { 0.0 };
    Ok(ContradictionTable {
        dimension: d,
        density_constant,
        rows,
        fitted_slope: crate::round15(fitted_slope),
    })
}
