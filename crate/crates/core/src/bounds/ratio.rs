//! Theoretical approximation ratios.

use alloc::vec::Vec;

use crate::error::{Error, Result};

const TAU_MAX: f64 = 1.0 / 6.0;
const GRID: usize = 200;
const GRID_LOW: f64 = 1e-10;

/// The minimised expression of `f(ε)` at `θ = 1 - τ`, before the final `-1`.
fn f_objective(eps: f64, tau: f64, rho: f64) -> f64 {
    let a = (3.0 * rho + tau - 4.0 * tau * rho) / (1.0 - rho);
    let zeta = a + eps / (tau * rho) * (1.0 - tau * rho - a);
    (1.0 + zeta) / (1.0 - tau) + 3.0 * eps / tau + 3.0 * rho / ((1.0 - rho) * (1.0 - tau))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FEps {
    pub value: f64,
    pub tau: f64,
    pub rho: f64,
}

/// `f(ε)` minimised over `0 < τ, ρ ≤ 1/6`: a log-spaced grid, then a
/// pattern search in log coordinates.
pub fn ratio_f_eps(eps: f64) -> Result<FEps> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidParameter { name: "eps", value: eps });
    }
    let lo = libm::log(GRID_LOW);
    let hi = libm::log(TAU_MAX);
    let step = (hi - lo) / (GRID - 1) as f64;
    let eval = |lt: f64, lr: f64| f_objective(eps, libm::exp(lt), libm::exp(lr));
    let mut best = (f64::INFINITY, lo, lo);
    for i in 0..GRID {
        let lt = lo + step * i as f64;
        for j in 0..GRID {
            let lr = lo + step * j as f64;
            let v = eval(lt, lr);
            if v < best.0 {
                best = (v, lt, lr);
            }
        }
    }
    let (mut val, mut lt, mut lr) = best;
    let mut s = step;
    while s > 1e-12 {
        let mut improved = false;
        for (dt, dr) in [(s, 0.0), (-s, 0.0), (0.0, s), (0.0, -s)] {
            let (nt, nr) = ((lt + dt).min(hi), (lr + dr).min(hi));
            let v = eval(nt, nr);
            if v < val {
                (val, lt, lr) = (v, nt, nr);
                improved = true;
            }
        }
        if !improved {
            s *= 0.5;
        }
    }
    Ok(FEps { value: val - 1.0, tau: libm::exp(lt), rho: libm::exp(lr) })
}

/// Point where the decreasing `a(ε)` meets the increasing `b(ε)`, by
/// bisection on `ln ε`. Returns `(ε*, max{a, b}(ε*))`.
fn crossing(a: impl Fn(f64) -> f64, b: impl Fn(f64) -> Result<f64>) -> Result<(f64, f64)> {
    let (mut lo, mut hi) = (libm::log(1e-9), libm::log(1e-1));
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        let e = libm::exp(mid);
        if a(e) > b(e)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let e = libm::exp(0.5 * (lo + hi));
    Ok((e, a(e).max(b(e)?)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Regime {
    SplittableGeneral,
    UnsplittableGeneral,
    FixedK,
    SplittableFixedK,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::SplittableGeneral => "splittable-general",
            Regime::UnsplittableGeneral => "unsplittable-general",
            Regime::FixedK => "fixed-k",
            Regime::SplittableFixedK => "splittable-fixed-k",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Regime::SplittableGeneral, Regime::UnsplittableGeneral, Regime::FixedK, Regime::SplittableFixedK]
            .into_iter()
            .find(|r| r.name() == s)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub eps: Option<f64>,
    pub tau: Option<f64>,
    pub rho: Option<f64>,
    pub theta: Option<f64>,
    pub x0: Option<f64>,
    /// Integer maximiser of `g`, i.e. `1/x*`.
    pub x_int: Option<u64>,
    pub gamma: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RatioReport {
    pub k: Option<u64>,
    pub regime: Regime,
    pub theoretical_ratio: f64,
    pub witness: Witness,
    /// `(k, H_k)` for `k ≤ 30`.
    pub harmonic: Vec<(u64, f64)>,
}

/// Lower ratio of the unsplittable trade-off, `δ` in `3 + ln2 + 2f(ε) + δ`.
pub const UNSPLITTABLE_DELTA: f64 = 1e-6;

pub fn harmonic(k: u64) -> f64 {
    (1..=k).map(|i| 1.0 / i as f64).sum()
}

pub fn harmonic_table() -> Vec<(u64, f64)> {
    (1..=30).map(|k| (k, harmonic(k))).collect()
}

/// `g(x) = 3 + ln((k+1-x)/(⌊k/2⌋+1)) - 1/x`.
pub fn g(k: u64, x: f64) -> f64 {
    3.0 + libm::log((k as f64 + 1.0 - x) / ((k / 2) as f64 + 1.0)) - 1.0 / x
}

/// `g'(x) = -1/(k+1-x) + 1/x²`.
pub fn g_prime(k: u64, x: f64) -> f64 {
    -1.0 / (k as f64 + 1.0 - x) + 1.0 / (x * x)
}

/// `x₀ = (√(4k+5) - 1)/2`.
pub fn x0(k: u64) -> f64 {
    (libm::sqrt(4.0 * k as f64 + 5.0) - 1.0) / 2.0
}

/// Fixed-`k` ratio `max{g(⌈x₀⌉), g(⌊x₀⌋)}`, its integer maximiser and the
/// matching rounding parameter `γ = ln((k+1-1/x*)/(⌊k/2⌋+1))`, floored at 0.
pub fn fixed_k_ratio(k: u64) -> Result<(f64, u64, f64)> {
    if k < 3 {
        return Err(Error::InvalidParameter { name: "k", value: k as f64 });
    }
    let x = x0(k);
    let (lo, hi) = (libm::floor(x).max(1.0), libm::ceil(x));
    let (value, arg) = if g(k, hi) >= g(k, lo) { (g(k, hi), hi) } else { (g(k, lo), lo) };
    let gamma = libm::log((k as f64 + 1.0 - arg) / ((k / 2) as f64 + 1.0)).max(0.0);
    Ok((value, arg as u64, gamma))
}

/// Default `γ` for the LP-based tree partition at capacity `k`.
pub fn default_gamma(k: u64) -> f64 {
    fixed_k_ratio(k).map_or(0.0, |(_, _, gamma)| gamma)
}

fn general(a: impl Fn(f64) -> f64, b: impl Fn(f64) -> f64) -> Result<(f64, Witness)> {
    let (eps, value) = crossing(a, |e| Ok(b(ratio_f_eps(e)?.value)))?;
    let f = ratio_f_eps(eps)?;
    Ok((
        value,
        Witness { eps: Some(eps), tau: Some(f.tau), rho: Some(f.rho), theta: Some(1.0 - f.tau), ..Witness::default() },
    ))
}

/// Ratio of the given regime, recomputed from `f(ε)` or `g(x)`.
pub fn tradeoff_ratio(k: Option<u64>, regime: Regime) -> Result<RatioReport> {
    let ln2 = core::f64::consts::LN_2;
    let (theoretical_ratio, witness) = match regime {
        Regime::SplittableGeneral => general(|e| 4.0 - 2.0 * e, |f| 3.0 + 2.0 * f)?,
        Regime::UnsplittableGeneral => general(|e| 4.0 - 2.0 * e, |f| 3.0 + ln2 + 2.0 * f + UNSPLITTABLE_DELTA)?,
        Regime::FixedK | Regime::SplittableFixedK => {
            let k = k.ok_or(Error::InvalidParameter { name: "k", value: 0.0 })?;
            let (value, x_int, gamma) = fixed_k_ratio(k)?;
            let fixed = Witness { x0: Some(x0(k)), x_int: Some(x_int), gamma: Some(gamma), ..Witness::default() };
            if regime == Regime::FixedK {
                (value, fixed)
            } else {
                let (general_value, w) = general(|e| 3.0 + ln2 - e, |f| 3.0 + 2.0 * f)?;
                if general_value < value {
                    (general_value, w)
                } else {
                    (value, fixed)
                }
            }
        }
    };
    Ok(RatioReport { k, regime, theoretical_ratio, witness, harmonic: harmonic_table() })
}
