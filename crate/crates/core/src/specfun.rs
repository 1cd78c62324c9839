//! Bessel functions J_nu of integer and half-integer order, and the
//! enumeration of their positive zeros.
//!
//! The order is stored as `2*nu` in an integer so that `nu = d/2` is exact
//! for every dimension `d >= 1`. Evaluation uses the ascending power series
//! for small arguments; beyond the series range, half-integer orders go
//! through the spherical Bessel recurrence (forward-stable for `x > nu`)
//! and integer orders through the trapezoid sum of Bessel's integral, whose
//! aliasing error is controlled explicitly.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Bessel order nu, stored as 2*nu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Order {
    twice_nu: u32,
}

impl Order {
    /// Order nu = twice_nu / 2. Requires twice_nu >= 1.
    pub fn from_twice_nu(twice_nu: u32) -> Result<Self> {
        if twice_nu == 0 {
            return Err(Error::InvalidArgument(
                "order must satisfy 2*nu >= 1".into(),
            ));
        }
        Ok(Order { twice_nu })
    }

    /// The order d/2 attached to the d-dimensional ball.
    pub fn from_dimension(d: usize) -> Result<Self> {
        Self::from_twice_nu(u32::try_from(d).map_err(|_| {
            Error::InvalidArgument(format!("dimension {d} out of range"))
        })?)
    }

    pub fn twice_nu(&self) -> u32 {
        self.twice_nu
    }

    pub fn nu(&self) -> f64 {
        f64::from(self.twice_nu) / 2.0
    }

    pub fn is_half_integer(&self) -> bool {
        self.twice_nu % 2 == 1
    }
}

impl std::fmt::Display for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_half_integer() {
            write!(f, "{}/2", self.twice_nu)
        } else {
            write!(f, "{}", self.twice_nu / 2)
        }
    }
}

/// Gamma(a) for a = twice_a / 2 with twice_a >= 1, computed exactly from
/// Gamma(1) = 1 and Gamma(1/2) = sqrt(pi) by the recurrence.
fn gamma_half_integer(twice_a: u32) -> f64 {
    debug_assert!(twice_a >= 1);
    let mut value = if twice_a % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut t = if twice_a % 2 == 0 { 2u32 } else { 1u32 };
    while t < twice_a {
        value *= f64::from(t) / 2.0;
        t += 2;
    }
    value
}

/// Ascending power series for J_nu(x). Accurate (absolute error well below
/// 1e-12) for x up to the regime switch in `bessel_j`.
fn bessel_series(order: Order, x: f64) -> f64 {
    let nu = order.nu();
    let half = x / 2.0;
    // leading term (x/2)^nu / Gamma(nu+1)
    let mut term = (nu * half.ln()).exp() / gamma_half_integer(order.twice_nu() + 2);
    let q = -half * half;
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
    sum
}

/// J_{n+1/2}(x) via the spherical Bessel functions j_n, using the upward
/// recurrence. Stable for x above the order, which is where it is used.
fn bessel_half_integer_recurrence(order: Order, x: f64) -> f64 {
    let n = (order.twice_nu() - 1) / 2; // nu = n + 1/2
    let sx = x.sin();
    let cx = x.cos();
    let mut jm = sx / x; // j_0
    if n == 0 {
        return (2.0 * x / PI).sqrt() * jm;
    }
    let mut j = sx / (x * x) - cx / x; // j_1
    for k in 1..n {
        let next = (2.0 * f64::from(k) + 1.0) / x * j - jm;
        jm = j;
        j = next;
    }
    (2.0 * x / PI).sqrt() * j
}

/// J_n(x) for integer n >= 0 by the trapezoid sum of Bessel's integral
/// (1/pi) * int_0^pi cos(n t - x sin t) dt. With N panels the quadrature
/// error is a sum of Bessel terms of order >= 2N - n, which is driven below
/// 1e-18 by taking 2N past x plus an Airy-width margin.
fn bessel_integer_integral(n: u32, x: f64) -> f64 {
    let margin = 40.0f64.max(14.0 * x.cbrt());
    let panels = (((x + f64::from(n) + margin) / 2.0).ceil() as usize).max(16);
    let h = PI / panels as f64;
    let nf = f64::from(n);
    // endpoints: t=0 gives cos(0)=1, t=pi gives cos(n*pi)
    let mut sum = 0.5 * (1.0 + (nf * PI).cos());
    for k in 1..panels {
        let t = h * k as f64;
        sum += (nf * t - x * t.sin()).cos();
    }
    sum * h / PI
}

/// Argument below which the ascending series is used.
fn series_switch(order: Order) -> f64 {
    12.0f64.max(2.0 * order.nu())
}

/// Evaluate J_nu(x) for x >= 0, absolute error <= 1e-12 for x <= 1e4.
pub fn bessel_j(order: Order, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "bessel_j: nonfinite argument {x}"
        )));
    }
    if x < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "bessel_j: negative argument {x}"
        )));
    }
    if x == 0.0 {
        // twice_nu >= 1 so nu > 0 and the series has no constant term
        return Ok(0.0);
    }
    if x <= series_switch(order) {
        Ok(bessel_series(order, x))
    } else if order.is_half_integer() {
        Ok(bessel_half_integer_recurrence(order, x))
    } else {
        Ok(bessel_integer_integral(order.twice_nu() / 2, x))
    }
}

/// Positive zeros of J_nu up to an enumeration horizon.
#[derive(Debug, Clone)]
pub struct ZeroTable {
    order: Order,
    zeros: Vec<f64>,
    upper_limit: f64,
}

impl ZeroTable {
    pub fn order(&self) -> Order {
        self.order
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn upper_limit(&self) -> f64 {
        self.upper_limit
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// CSV with header `index,zero`, 15 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,zero\n");
        for (i, z) in self.zeros.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, crate::fmt15(*z)));
        }
        out
    }
}

/// Scan step for zero isolation. Consecutive zeros of J_nu are at least
/// pi apart for nu >= 1/2, so pi/8 cannot skip a sign change.
const SCAN_STEP: f64 = PI / 8.0;

const ZERO_TOL: f64 = 1e-13;

fn bisect_zero(order: Order, mut a: f64, mut b: f64) -> Result<f64> {
    let mut fa = bessel_j(order, a)?;
    for _ in 0..200 {
        // stop at 1e-13 or at the float spacing of the bracket, whichever
        // is coarser
        if b - a <= ZERO_TOL.max(4.0 * f64::EPSILON * b.abs()) {
            return Ok(0.5 * (a + b));
        }
        let m = 0.5 * (a + b);
        let fm = bessel_j(order, m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if (fa < 0.0) != (fm < 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    Err(Error::RefinementFailed(0.5 * (a + b)))
}

/// Enumerate every positive zero of J_nu in (0, upper_limit], each to
/// absolute accuracy ~1e-12. Completeness comes from a uniform sign scan
/// at step pi/8, finer than the minimal zero gap.
pub fn bessel_zeros(order: Order, upper_limit: f64) -> Result<ZeroTable> {
    if !(upper_limit > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "bessel_zeros: upper_limit must be positive, got {upper_limit}"
        )));
    }
    let mut zeros = Vec::new();
    // J_nu is positive on (0, first zero); the first zero exceeds nu >= 1/2.
    let mut prev_x = 0.0f64;
    let mut prev_sign_pos = true;
    let mut k = 1usize;
    loop {
        let x = (SCAN_STEP * k as f64).min(upper_limit);
        let fx = bessel_j(order, x)?;
        if fx == 0.0 {
            zeros.push(x);
            prev_sign_pos = !prev_sign_pos;
        } else {
            let sign_pos = fx > 0.0;
            if sign_pos != prev_sign_pos && prev_x > 0.0 {
                zeros.push(bisect_zero(order, prev_x, x)?);
            }
            prev_sign_pos = sign_pos;
        }
        prev_x = x;
        if x >= upper_limit {
            break;
        }
        k += 1;
    }
    Ok(ZeroTable {
        order,
        zeros,
        upper_limit,
    })
}

/// Number of zeros of J_nu in (0, upper_limit].
pub fn zero_count(order: Order, upper_limit: f64) -> Result<usize> {
    Ok(bessel_zeros(order, upper_limit)?.len())
}
