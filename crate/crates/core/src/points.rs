//! Finite point sets in R^d with exact-rational or floating coordinates,
//! plus the CSV interchange format (one point per line, `#` comments,
//! `p/q` tokens accepted in exact mode).

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{ToPrimitive, Zero};
use std::collections::BTreeSet;
use std::str::FromStr;

#[derive(Debug, Clone)]
pub enum Coordinates {
    Exact(Vec<Vec<BigRational>>),
    Float(Vec<Vec<f64>>),
}

#[derive(Debug, Clone)]
pub struct PointSet {
    dimension: usize,
    label: String,
    coords: Coordinates,
}

impl PointSet {
    pub fn from_float(
        dimension: usize,
        points: Vec<Vec<f64>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidArgument("dimension must be >= 1".into()));
        }
        for p in &points {
            if p.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: p.len(),
                });
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::InvalidArgument("nonfinite coordinate".into()));
            }
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            let key: Vec<u64> = p.iter().map(|c| c.to_bits()).collect();
            if !seen.insert(key) {
                return Err(Error::InvalidArgument("duplicate point".into()));
            }
        }
        Ok(PointSet {
            dimension,
            label: label.into(),
            coords: Coordinates::Float(points),
        })
    }

    pub fn from_exact(
        dimension: usize,
        points: Vec<Vec<BigRational>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidArgument("dimension must be >= 1".into()));
        }
        for p in &points {
            if p.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: p.len(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p.clone()) {
                return Err(Error::InvalidArgument("duplicate point".into()));
            }
        }
        Ok(PointSet {
            dimension,
            label: label.into(),
            coords: Coordinates::Exact(points),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        match &self.coords {
            Coordinates::Exact(v) => v.len(),
            Coordinates::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.coords, Coordinates::Exact(_))
    }

    pub fn coordinates(&self) -> &Coordinates {
        &self.coords
    }

    pub fn exact_points(&self) -> Option<&Vec<Vec<BigRational>>> {
        match &self.coords {
            Coordinates::Exact(v) => Some(v),
            Coordinates::Float(_) => None,
        }
    }

    /// Floating view of the points (lossy for exact coordinates).
    pub fn float_points(&self) -> Vec<Vec<f64>> {
        match &self.coords {
            Coordinates::Float(v) => v.clone(),
            Coordinates::Exact(v) => v
                .iter()
                .map(|p| p.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect())
                .collect(),
        }
    }

    /// Largest pairwise Euclidean distance (0 for fewer than two points).
    pub fn diameter(&self) -> f64 {
        let pts = self.float_points();
        let mut best = 0.0f64;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                best = best.max(euclidean(&pts[i], &pts[j]));
            }
        }
        best
    }

    /// Largest point norm.
    pub fn max_norm(&self) -> f64 {
        self.float_points()
            .iter()
            .map(|p| norm(p))
            .fold(0.0, f64::max)
    }

    /// Parse the point-set CSV format. The set is exact when every token is
    /// an integer or a `p/q` fraction; any decimal token makes it float.
    pub fn parse_csv(text: &str, label: impl Into<String>) -> Result<Self> {
        let mut exact_rows: Vec<Vec<BigRational>> = Vec::new();
        let mut float_rows: Vec<Vec<f64>> = Vec::new();
        let mut all_exact = true;
        let mut dimension = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut exact_row = Vec::new();
            let mut float_row = Vec::new();
            for tok in line.split(',') {
                let tok = tok.trim();
                match parse_rational(tok) {
                    Some(r) => {
                        float_row.push(r.to_f64().ok_or_else(|| Error::Parse {
                            line: lineno + 1,
                            message: format!("rational {tok} overflows f64"),
                        })?);
                        exact_row.push(r);
                    }
                    None => {
                        let v: f64 = tok.parse().map_err(|_| Error::Parse {
                            line: lineno + 1,
                            message: format!("bad coordinate token {tok:?}"),
                        })?;
                        if !v.is_finite() {
                            return Err(Error::Parse {
                                line: lineno + 1,
                                message: format!("nonfinite coordinate {tok:?}"),
                            });
                        }
                        all_exact = false;
                        float_row.push(v);
                    }
                }
            }
            match dimension {
                None => dimension = Some(float_row.len()),
                Some(d) if d != float_row.len() => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: format!("expected {d} coordinates, got {}", float_row.len()),
                    });
                }
                _ => {}
            }
            if all_exact {
                exact_rows.push(exact_row);
            }
            float_rows.push(float_row);
        }
        let dimension = dimension.ok_or_else(|| Error::Parse {
            line: 0,
            message: "no points in input".into(),
        })?;
        if all_exact {
            Self::from_exact(dimension, exact_rows, label)
        } else {
            Self::from_float(dimension, float_rows, label)
        }
    }

    /// Serialize back to the CSV format; exact sets keep `p/q` tokens.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.coords {
            Coordinates::Exact(rows) => {
                for row in rows {
                    let toks: Vec<String> = row.iter().map(format_rational).collect();
                    out.push_str(&toks.join(","));
                    out.push('\n');
                }
            }
            Coordinates::Float(rows) => {
                for row in rows {
                    let toks: Vec<String> = row.iter().map(|c| crate::fmt15(*c)).collect();
                    out.push_str(&toks.join(","));
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse an integer or `p/q` token into an exact rational.
fn parse_rational(tok: &str) -> Option<BigRational> {
    if let Some((num, den)) = tok.split_once('/') {
        let n = BigInt::from_str(num.trim()).ok()?;
        let d = BigInt::from_str(den.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(tok).ok()?;
        Some(BigRational::from_integer(n))
    }
}

pub fn norm(p: &[f64]) -> f64 {
    p.iter().map(|c| c * c).sum::<f64>().sqrt()
}

pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
