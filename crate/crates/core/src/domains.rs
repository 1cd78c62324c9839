//! The unit cube and unit ball: indicator-function Fourier transforms,
//! zero-set descriptions, and a direct quadrature oracle for inner
//! products of exponentials.
//!
//! The ball transform is radial with profile
//! `f(rho) = rho^{-d/2} J_{d/2}(2 pi rho)`, `f(0) = vol(B_d)`; its zero
//! set is the union of spheres whose radii are Bessel roots divided by
//! `2 pi`. The cube transform vanishes exactly when some coordinate is a
//! nonzero integer.

use crate::error::{Error, Result};
use crate::specfun::{bessel_j, bessel_zeros, Order};
use num::complex::Complex64;
use num::rational::BigRational;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    UnitCube,
    UnitBall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domain {
    kind: DomainKind,
    dimension: usize,
}

impl Domain {
    pub fn new(kind: DomainKind, dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidArgument("dimension must be >= 1".into()));
        }
        Ok(Domain { kind, dimension })
    }

    pub fn cube(dimension: usize) -> Result<Self> {
        Self::new(DomainKind::UnitCube, dimension)
    }

    pub fn ball(dimension: usize) -> Result<Self> {
        Self::new(DomainKind::UnitBall, dimension)
    }

    /// Parse the `cube:D` / `ball:D` CLI syntax.
    pub fn parse(spec: &str) -> Result<Self> {
        let (kind, dim) = spec.split_once(':').ok_or_else(|| {
            Error::InvalidArgument(format!("domain must be cube:D or ball:D, got {spec:?}"))
        })?;
        let dimension: usize = dim.parse().map_err(|_| {
            Error::InvalidArgument(format!("bad dimension in domain spec {spec:?}"))
        })?;
        match kind {
            "cube" => Self::cube(dimension),
            "ball" => Self::ball(dimension),
            _ => Err(Error::InvalidArgument(format!(
                "unknown domain kind {kind:?}"
            ))),
        }
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Lebesgue measure of the domain.
    pub fn volume(&self) -> f64 {
        match self.kind {
            DomainKind::UnitCube => 1.0,
            DomainKind::UnitBall => unit_ball_volume(self.dimension),
        }
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            DomainKind::UnitCube => write!(f, "cube:{}", self.dimension),
            DomainKind::UnitBall => write!(f, "ball:{}", self.dimension),
        }
    }
}

/// vol(B_d) = pi^{d/2} / Gamma(d/2 + 1).
pub fn unit_ball_volume(d: usize) -> f64 {
    let nu = d as f64 / 2.0;
    // Gamma(d/2 + 1) by the recurrence from Gamma(1) / Gamma(1/2)
    let mut g = if d % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut t = if d % 2 == 0 { 2 } else { 1 };
    while t < d + 2 {
        g *= t as f64 / 2.0;
        t += 2;
    }
    PI.powf(nu) / g
}

/// Radial profile of the ball transform: f(rho) = rho^{-d/2} J_{d/2}(2 pi rho)
/// with the removable singularity at rho = 0 filled by the power series.
pub fn ball_radial_profile(d: usize, rho: f64) -> Result<f64> {
    if !(rho.is_finite() && rho >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "radial profile needs finite rho >= 0, got {rho}"
        )));
    }
    let order = Order::from_dimension(d)?;
    let nu = order.nu();
    let z = 2.0 * PI * rho;
    if z <= 12.0f64.max(2.0 * nu) {
        // f(rho) = pi^nu * sum_m (-pi^2 rho^2)^m / (m! Gamma(m + nu + 1))
        let mut term = PI.powf(nu) / gamma_half_plus_one(d);
        let q = -(PI * rho) * (PI * rho);
        let mut sum = term;
        let mut m = 1.0f64;
        loop {
            term *= q / (m * (m + nu));
            sum += term;
            if term.abs() < 1e-18 * sum.abs().max(1.0) || m > 400.0 {
                break;
            }
            m += 1.0;
        }
        Ok(sum)
    } else {
        Ok(rho.powf(-nu) * bessel_j(order, z)?)
    }
}

/// Gamma(d/2 + 1) for integer d >= 1.
fn gamma_half_plus_one(d: usize) -> f64 {
    let mut g = if d % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut t = if d % 2 == 0 { 2 } else { 1 };
    while t < d + 2 {
        g *= t as f64 / 2.0;
        t += 2;
    }
    g
}

/// chi_D^(xi) = int_D e^{-2 pi i x . xi} dx.
pub fn transform_value(domain: Domain, xi: &[f64]) -> Result<Complex64> {
    if xi.len() != domain.dimension() {
        return Err(Error::DimensionMismatch {
            expected: domain.dimension(),
            got: xi.len(),
        });
    }
    if xi.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidArgument("nonfinite frequency".into()));
    }
    match domain.kind() {
        DomainKind::UnitCube => {
            let mut acc = Complex64::new(1.0, 0.0);
            for &t in xi {
                acc *= cube_axis_factor(t);
            }
            Ok(acc)
        }
        DomainKind::UnitBall => {
            let rho = crate::points::norm(xi);
            Ok(Complex64::new(
                ball_radial_profile(domain.dimension(), rho)?,
                0.0,
            ))
        }
    }
}

/// (1 - e^{-2 pi i t}) / (2 pi i t), equal to 1 at t = 0.
fn cube_axis_factor(t: f64) -> Complex64 {
    if t == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let phase = -2.0 * PI * t;
    let numer = Complex64::new(1.0 - phase.cos(), -phase.sin());
    let denom = Complex64::new(0.0, 2.0 * PI * t);
    numer / denom
}

/// The zero set Z_D of the transform: integer hyperplanes for the cube,
/// concentric spheres at Bessel-root radii for the ball.
#[derive(Debug, Clone)]
pub enum ZeroSetDescription {
    CubeHyperplanes {
        dimension: usize,
    },
    BallSpheres {
        dimension: usize,
        root_radii: Vec<f64>,
        horizon: f64,
    },
}

impl ZeroSetDescription {
    pub fn dimension(&self) -> usize {
        match self {
            ZeroSetDescription::CubeHyperplanes { dimension } => *dimension,
            ZeroSetDescription::BallSpheres { dimension, .. } => *dimension,
        }
    }

    pub fn root_radii(&self) -> Option<&[f64]> {
        match self {
            ZeroSetDescription::CubeHyperplanes { .. } => None,
            ZeroSetDescription::BallSpheres { root_radii, .. } => Some(root_radii),
        }
    }

    /// First positive zero-set radius (the separation radius of the domain).
    pub fn smallest_radius(&self) -> Option<f64> {
        match self {
            ZeroSetDescription::CubeHyperplanes { .. } => Some(1.0),
            ZeroSetDescription::BallSpheres { root_radii, .. } => root_radii.first().copied(),
        }
    }

    /// Distance from xi to the zero set. For the cube this is the smallest
    /// coordinate distance to a nonzero-integer hyperplane; for the ball the
    /// smallest gap between |xi| and an enumerated root radius.
    pub fn distance_to(&self, xi: &[f64]) -> Result<f64> {
        self.check_dim(xi)?;
        match self {
            ZeroSetDescription::CubeHyperplanes { .. } => Ok(xi
                .iter()
                .map(|&c| distance_to_nonzero_integer(c))
                .fold(f64::INFINITY, f64::min)),
            ZeroSetDescription::BallSpheres {
                root_radii,
                horizon,
                ..
            } => {
                let r = crate::points::norm(xi);
                if r > *horizon {
                    return Err(Error::HorizonExceeded {
                        radius: r,
                        horizon: *horizon,
                    });
                }
                Ok(root_radii
                    .iter()
                    .map(|rk| (r - rk).abs())
                    .fold(f64::INFINITY, f64::min))
            }
        }
    }

    /// Membership of xi in Z_D up to tol. Ball queries beyond the
    /// enumeration horizon are hard errors.
    pub fn contains(&self, xi: &[f64], tol: f64) -> Result<bool> {
        if !(tol > 0.0) {
            return Err(Error::InvalidArgument("tol must be positive".into()));
        }
        Ok(self.distance_to(xi)? <= tol)
    }

    /// Exact membership for the cube: some coordinate is a nonzero integer.
    pub fn contains_exact(&self, xi: &[BigRational]) -> Result<bool> {
        match self {
            ZeroSetDescription::CubeHyperplanes { dimension } => {
                if xi.len() != *dimension {
                    return Err(Error::DimensionMismatch {
                        expected: *dimension,
                        got: xi.len(),
                    });
                }
                Ok(xi
                    .iter()
                    .any(|c| c.is_integer() && !num::Zero::is_zero(c)))
            }
            ZeroSetDescription::BallSpheres { .. } => Err(Error::Unsupported(
                "exact membership is only defined for the cube zero set".into(),
            )),
        }
    }

    /// CSV with header `index,radius` (ball only).
    pub fn to_csv(&self) -> Result<String> {
        match self {
            ZeroSetDescription::BallSpheres { root_radii, .. } => {
                let mut out = String::from("index,radius\n");
                for (i, r) in root_radii.iter().enumerate() {
                    out.push_str(&format!("{},{}\n", i + 1, crate::fmt15(*r)));
                }
                Ok(out)
            }
            ZeroSetDescription::CubeHyperplanes { .. } => Err(Error::Unsupported(
                "the cube zero set is the symbolic hyperplane rule, not a radius table".into(),
            )),
        }
    }

    fn check_dim(&self, xi: &[f64]) -> Result<()> {
        if xi.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: xi.len(),
            });
        }
        Ok(())
    }
}

fn distance_to_nonzero_integer(c: f64) -> f64 {
    let nearest = c.round();
    if nearest == 0.0 {
        1.0 - c.abs()
    } else {
        (c - nearest).abs()
    }
}

/// Describe Z_D up to |xi| <= horizon (the cube rule is horizon-free).
pub fn zero_set(domain: Domain, horizon: f64) -> Result<ZeroSetDescription> {
    if !(horizon > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "horizon must be positive, got {horizon}"
        )));
    }
    match domain.kind() {
        DomainKind::UnitCube => Ok(ZeroSetDescription::CubeHyperplanes {
            dimension: domain.dimension(),
        }),
        DomainKind::UnitBall => {
            let order = Order::from_dimension(domain.dimension())?;
            let table = bessel_zeros(order, 2.0 * PI * horizon)?;
            let root_radii = table.zeros().iter().map(|z| z / (2.0 * PI)).collect();
            Ok(ZeroSetDescription::BallSpheres {
                dimension: domain.dimension(),
                root_radii,
                horizon,
            })
        }
    }
}

/// Direct quadrature of <e_lambda, e_lambda'> = int_D e^{-2 pi i x.(l-l')} dx.
/// Deterministic midpoint rules: tensor grid on the cube, mapped polar /
/// spherical coordinates on the ball (d <= 3). Converges to
/// `transform_value(domain, lambda - lambda')` as resolution grows; this is
/// the independent oracle for the orthogonality criterion.
pub fn inner_product_numeric(
    domain: Domain,
    lambda: &[f64],
    lambda_prime: &[f64],
    resolution: usize,
) -> Result<Complex64> {
    let d = domain.dimension();
    if lambda.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: lambda.len(),
        });
    }
    if lambda_prime.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: lambda_prime.len(),
        });
    }
    if resolution < 8 {
        return Err(Error::InvalidArgument(
            "resolution must be at least 8".into(),
        ));
    }
    let diff = crate::points::sub(lambda, lambda_prime);
    match domain.kind() {
        DomainKind::UnitCube => {
            // the integrand factors over coordinates, so the tensor-product
            // midpoint sum is the product of one-dimensional midpoint sums
            let mut acc = Complex64::new(1.0, 0.0);
            for &t in &diff {
                let mut axis = Complex64::new(0.0, 0.0);
                for i in 0..resolution {
                    let x = (i as f64 + 0.5) / resolution as f64;
                    axis += unit_phase(-2.0 * PI * x * t);
                }
                acc *= axis / resolution as f64;
            }
            Ok(acc)
        }
        DomainKind::UnitBall => match d {
            1 => {
                let t = diff[0];
                let mut sum = Complex64::new(0.0, 0.0);
                for i in 0..resolution {
                    let x = -1.0 + 2.0 * (i as f64 + 0.5) / resolution as f64;
                    sum += unit_phase(-2.0 * PI * x * t);
                }
                Ok(sum * (2.0 / resolution as f64))
            }
            2 => {
                let mut sum = Complex64::new(0.0, 0.0);
                for i in 0..resolution {
                    let r = (i as f64 + 0.5) / resolution as f64;
                    let mut ring = Complex64::new(0.0, 0.0);
                    for j in 0..resolution {
                        let th = 2.0 * PI * (j as f64 + 0.5) / resolution as f64;
                        let dot = r * (th.cos() * diff[0] + th.sin() * diff[1]);
                        ring += unit_phase(-2.0 * PI * dot);
                    }
                    sum += ring * r;
                }
                Ok(sum * (2.0 * PI / (resolution * resolution) as f64))
            }
            3 => {
                let mut sum = Complex64::new(0.0, 0.0);
                for i in 0..resolution {
                    let r = (i as f64 + 0.5) / resolution as f64;
                    for j in 0..resolution {
                        let phi = PI * (j as f64 + 0.5) / resolution as f64;
                        let (sp, cp) = (phi.sin(), phi.cos());
                        let mut ring = Complex64::new(0.0, 0.0);
                        for k in 0..resolution {
                            let th = 2.0 * PI * (k as f64 + 0.5) / resolution as f64;
                            let x = [r * sp * th.cos(), r * sp * th.sin(), r * cp];
                            let dot = x[0] * diff[0] + x[1] * diff[1] + x[2] * diff[2];
                            ring += unit_phase(-2.0 * PI * dot);
                        }
                        sum += ring * (r * r * sp);
                    }
                }
                let cell = (1.0 / resolution as f64)
                    * (PI / resolution as f64)
                    * (2.0 * PI / resolution as f64);
                Ok(sum * cell)
            }
            _ => Err(Error::Unsupported(format!(
                "ball quadrature implemented for d <= 3, got d = {d}"
            ))),
        },
    }
}

fn unit_phase(angle: f64) -> Complex64 {
    Complex64::new(angle.cos(), angle.sin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn transform_at_zero_is_volume() {
        let cube = Domain::cube(2).unwrap();
        let v = transform_value(cube, &[0.0, 0.0]).unwrap();
        assert!((v.re - 1.0).abs() < 1e-15 && v.im.abs() < 1e-15);

        let ball = Domain::ball(2).unwrap();
        let v = transform_value(ball, &[0.0, 0.0]).unwrap();
        assert!((v.re - PI).abs() < 1e-14);

        let ball3 = Domain::ball(3).unwrap();
        let v = transform_value(ball3, &[0.0, 0.0, 0.0]).unwrap();
        assert!((v.re - 4.0 * PI / 3.0).abs() < 1e-14);
    }

    #[test]
    fn cube_vanishes_on_integer_hyperplanes() {
        let cube = Domain::cube(2).unwrap();
        let v = transform_value(cube, &[1.0, 0.5]).unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn ball_vanishes_at_first_root_radius() {
        // first zero of J_{3/2} frozen from the tan x = x bisection oracle
        let rho = 4.493409457909064 / (2.0 * PI);
        let ball = Domain::ball(3).unwrap();
        let v = transform_value(ball, &[rho, 0.0, 0.0]).unwrap();
        assert!(v.norm() < 1e-9, "|f| = {}", v.norm());
    }

    #[test]
    fn ball_zero_set_radii() {
        let zs = zero_set(Domain::ball(2).unwrap(), 1.3).unwrap();
        let radii = zs.root_radii().unwrap();
        assert_eq!(radii.len(), 2);
        // first two zeros of J_1 / 2 pi
        assert!((radii[0] - 3.8317059702075123 / (2.0 * PI)).abs() < 1e-11);
        assert!((radii[1] - 7.0155866698156188 / (2.0 * PI)).abs() < 1e-11);

        let zs3 = zero_set(Domain::ball(3).unwrap(), 0.8).unwrap();
        let radii3 = zs3.root_radii().unwrap();
        assert_eq!(radii3.len(), 1);
        assert!((radii3[0] - 0.7151483).abs() < 1e-6);
    }

    #[test]
    fn cube_zero_set_membership() {
        let zs = zero_set(Domain::cube(3).unwrap(), 1.0).unwrap();
        assert!(zs.contains(&[2.0, 0.0, 0.0], 1e-12).unwrap());
        assert!(!zs.contains(&[0.5, 0.5, 0.25], 1e-12).unwrap());
        assert!(zs
            .contains_exact(&[rat(3, 1), rat(1, 4), rat(0, 1)])
            .unwrap());
        assert!(!zs
            .contains_exact(&[rat(1, 2), rat(1, 2), rat(0, 1)])
            .unwrap());
    }

    #[test]
    fn ball_membership_and_horizon() {
        let zs = zero_set(Domain::ball(2).unwrap(), 2.0).unwrap();
        assert!(zs.contains(&[0.609835, 0.0], 1e-5).unwrap());
        assert!(!zs.contains(&[0.5, 0.0], 1e-5).unwrap());
        assert!(matches!(
            zs.contains(&[3.0, 0.0], 1e-5),
            Err(Error::HorizonExceeded { .. })
        ));
    }

    #[test]
    fn cube_exactness_iff_zero_transform() {
        let cube = Domain::cube(2).unwrap();
        let zs = zero_set(cube, 1.0).unwrap();
        let candidates = [
            vec![1.0, 0.3],
            vec![0.5, 0.5],
            vec![-2.0, 0.7],
            vec![0.25, 1e-3],
        ];
        for xi in candidates {
            let v = transform_value(cube, &xi).unwrap().norm();
            let member = zs.contains(&xi, 1e-12).unwrap();
            assert_eq!(v <= 1e-12, member, "xi = {xi:?}, |v| = {v}");
        }
    }

    #[test]
    fn ball_transform_is_radial() {
        let ball = Domain::ball(2).unwrap();
        let xi = [0.83, 0.0];
        let base = transform_value(ball, &xi).unwrap().re;
        for k in 1..8 {
            let th = k as f64 * 0.731;
            let rot = [0.83 * th.cos(), 0.83 * th.sin()];
            let v = transform_value(ball, &rot).unwrap().re;
            assert!((v - base).abs() <= 1e-12);
        }
    }

    #[test]
    fn continuity_at_origin() {
        for dom in [Domain::cube(2).unwrap(), Domain::ball(2).unwrap()] {
            let vol = dom.volume();
            let mut eps = 0.1;
            let mut last_gap = f64::INFINITY;
            for _ in 0..12 {
                let v = transform_value(dom, &[eps, eps / 3.0]).unwrap();
                let gap = (v.re - vol).abs() + v.im.abs();
                assert!(gap < last_gap || gap < 1e-12);
                last_gap = gap;
                eps /= 4.0;
            }
            assert!(last_gap < 1e-6);
        }
    }

    #[test]
    fn quadrature_cube_orthogonality() {
        let cube1 = Domain::cube(1).unwrap();
        let v = inner_product_numeric(cube1, &[1.0], &[0.0], 256).unwrap();
        assert!(v.norm() <= 1e-3);

        let cube2 = Domain::cube(2).unwrap();
        let v = inner_product_numeric(cube2, &[0.3, 0.7], &[0.3, 0.7], 64).unwrap();
        assert!((v.re - 1.0).abs() < 1e-6 && v.im.abs() < 1e-6);
    }

    #[test]
    fn quadrature_ball_first_root() {
        let ball = Domain::ball(2).unwrap();
        let v = inner_product_numeric(ball, &[0.609835, 0.0], &[0.0, 0.0], 512).unwrap();
        assert!(v.norm() <= 5e-3, "|ip| = {}", v.norm());
    }

    #[test]
    fn quadrature_converges_to_transform() {
        for dom in [Domain::cube(2).unwrap(), Domain::ball(2).unwrap()] {
            let l = [0.9, -0.4];
            let lp = [-0.3, 0.25];
            let diff = crate::points::sub(&l, &lp);
            let exact = transform_value(dom, &diff).unwrap();
            let mut errs = Vec::new();
            for res in [32, 64, 128, 256] {
                let ip = inner_product_numeric(dom, &l, &lp, res).unwrap();
                errs.push((ip - exact).norm());
            }
            // observed order >= 1 under resolution doubling
            for w in errs.windows(2) {
                assert!(w[1] <= w[0] / 1.8 + 1e-12, "errors {errs:?}");
            }
        }
    }

    #[test]
    fn quadrature_ball_d3() {
        let ball = Domain::ball(3).unwrap();
        let l = [0.4, 0.1, -0.2];
        let lp = [0.0, 0.0, 0.1];
        let diff = crate::points::sub(&l, &lp);
        let exact = transform_value(ball, &diff).unwrap();
        let ip = inner_product_numeric(ball, &l, &lp, 48).unwrap();
        assert!((ip - exact).norm() < 2e-3);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let ball = Domain::ball(2).unwrap();
        assert!(transform_value(ball, &[1.0]).is_err());
        assert!(inner_product_numeric(ball, &[1.0, 0.0], &[0.0], 64).is_err());
        assert!(Domain::parse("ball:0").is_err());
        assert!(Domain::parse("cone:2").is_err());
        assert_eq!(Domain::parse("ball:3").unwrap(), Domain::ball(3).unwrap());
    }
}
