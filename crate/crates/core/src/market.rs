//! Market primitives: firm types, quality premium, valuation distribution,
//! parameter validation, and the flat key-value config format.
//!
//! A market has two firms, each privately drawing quality `Good` or `Bad`
//! with prior `mu0`, and a unit mass of consumers with valuations `v` drawn
//! from `F_v` on `[0, v_bar]`. A consumer values the bad product at `v` and
//! the good product at `h(v) = v + nu0 + nu1 * v`. The correlation regime
//! fixes the cost ordering: positive means the good type is costlier
//! (`c_g > c_b > 0`), negative means it is cheaper (`c_g = 0 < c_b`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, MarketViolation, Result};
use crate::numeric::{count_peaks, grid_then_golden_max};

/// Money, valuations, and demand masses are plain `f64` throughout.
pub type Money = f64;

/// Quality drawn by a firm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FirmType {
    #[serde(rename = "G")]
    Good,
    #[serde(rename = "B")]
    Bad,
}

impl FirmType {
    pub const ALL: [FirmType; 2] = [FirmType::Good, FirmType::Bad];

    pub fn label(self) -> &'static str {
        match self {
            FirmType::Good => "G",
            FirmType::Bad => "B",
        }
    }
}

/// Identity of a competing firm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FirmId {
    X,
    Y,
}

impl FirmId {
    pub const ALL: [FirmId; 2] = [FirmId::X, FirmId::Y];

    pub fn other(self) -> FirmId {
        match self {
            FirmId::X => FirmId::Y,
            FirmId::Y => FirmId::X,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FirmId::X => "X",
            FirmId::Y => "Y",
        }
    }
}

/// Correlation between quality and marginal cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Good quality costs more: `c_g > c_b > 0`.
    Positive,
    /// Good quality costs less; cost of the good type normalised to zero.
    Negative,
}

/// Affine quality premium `h(v) = v + nu0 + nu1 * v`.
///
/// `nu1 = 0` is the constant-premium case with premium `nu = nu0`;
/// `nu1 > 0` makes the premium strictly increasing in the valuation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QualityPremium {
    pub nu0: Money,
    pub nu1: f64,
}

impl QualityPremium {
    pub fn constant(nu: Money) -> Self {
        QualityPremium { nu0: nu, nu1: 0.0 }
    }

    /// Perceived good-quality valuation `h(v)`.
    pub fn h(&self, v: f64) -> f64 {
        v + self.nu0 + self.nu1 * v
    }

    /// Inverse of `h`.
    pub fn h_inv(&self, p: f64) -> f64 {
        (p - self.nu0) / (1.0 + self.nu1)
    }

    /// Premium `h(v) - v` at valuation `v`.
    pub fn premium(&self, v: f64) -> f64 {
        self.nu0 + self.nu1 * v
    }

    /// Inverse of the premium map; only defined for `nu1 > 0`.
    pub fn premium_inv(&self, delta: f64) -> Result<f64> {
        if self.nu1 <= 0.0 {
            return Err(Error::ConstantPremium);
        }
        Ok((delta - self.nu0) / self.nu1)
    }

    pub fn is_constant(&self) -> bool {
        self.nu1 == 0.0
    }

    /// Slope `h'(v) = 1 + nu1`.
    pub fn slope(&self) -> f64 {
        1.0 + self.nu1
    }
}

/// Consumer valuation distribution on `[0, v_bar]` with strictly positive
/// density: either uniform or a strictly increasing piecewise-linear cdf.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValuationDistribution {
    Uniform { v_bar: f64 },
    PiecewiseLinear { knots: Vec<(f64, f64)> },
}

impl ValuationDistribution {
    pub fn uniform(v_bar: f64) -> Self {
        ValuationDistribution::Uniform { v_bar }
    }

    /// Builds a piecewise-linear cdf; knots must run from `(0, 0)` to
    /// `(v_bar, 1)` strictly increasing in both coordinates.
    pub fn piecewise(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::InvalidInput("need at least two cdf knots".into()));
        }
        let first = knots[0];
        let last = knots[knots.len() - 1];
        if first != (0.0, 0.0) || (last.1 - 1.0).abs() > 1e-12 || last.0 <= 0.0 {
            return Err(Error::InvalidInput(
                "cdf knots must run from (0, 0) to (v_bar, 1)".into(),
            ));
        }
        for w in knots.windows(2) {
            if w[1].0 <= w[0].0 || w[1].1 <= w[0].1 {
                return Err(Error::InvalidInput(
                    "cdf knots must strictly increase in valuation and mass".into(),
                ));
            }
        }
        Ok(ValuationDistribution::PiecewiseLinear { knots })
    }

    pub fn v_bar(&self) -> f64 {
        match self {
            ValuationDistribution::Uniform { v_bar } => *v_bar,
            ValuationDistribution::PiecewiseLinear { knots } => knots[knots.len() - 1].0,
        }
    }

    /// Cdf `F_v(v)`, clamped to `[0, 1]` outside the support.
    pub fn cdf(&self, v: f64) -> f64 {
        match self {
            ValuationDistribution::Uniform { v_bar } => (v / v_bar).clamp(0.0, 1.0),
            ValuationDistribution::PiecewiseLinear { knots } => {
                if v <= 0.0 {
                    return 0.0;
                }
                if v >= knots[knots.len() - 1].0 {
                    return 1.0;
                }
                let i = knots.partition_point(|k| k.0 <= v);
                let (v0, f0) = knots[i - 1];
                let (v1, f1) = knots[i];
                f0 + (f1 - f0) * (v - v0) / (v1 - v0)
            }
        }
    }

    /// Density `f_v(v)`; zero outside the support.
    pub fn pdf(&self, v: f64) -> f64 {
        match self {
            ValuationDistribution::Uniform { v_bar } => {
                if (0.0..=*v_bar).contains(&v) {
                    1.0 / v_bar
                } else {
                    0.0
                }
            }
            ValuationDistribution::PiecewiseLinear { knots } => {
                if v < 0.0 || v > knots[knots.len() - 1].0 {
                    return 0.0;
                }
                let i = knots.partition_point(|k| k.0 < v).clamp(1, knots.len() - 1);
                let (v0, f0) = knots[i - 1];
                let (v1, f1) = knots[i];
                (f1 - f0) / (v1 - v0)
            }
        }
    }

    /// Quantile `F_v^{-1}(u)` for `u` in `[0, 1]`.
    pub fn quantile(&self, u: f64) -> f64 {
        let u = u.clamp(0.0, 1.0);
        match self {
            ValuationDistribution::Uniform { v_bar } => u * v_bar,
            ValuationDistribution::PiecewiseLinear { knots } => {
                let i = knots
                    .partition_point(|k| k.1 <= u)
                    .clamp(1, knots.len() - 1);
                let (v0, f0) = knots[i - 1];
                let (v1, f1) = knots[i];
                v0 + (v1 - v0) * (u - f0) / (f1 - f0)
            }
        }
    }
}

/// Full description of a market environment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarketParams {
    /// Prior probability that a firm draws the good type.
    pub mu0: f64,
    pub c_g: Money,
    pub c_b: Money,
    pub premium: QualityPremium,
    pub dist: ValuationDistribution,
    pub p_max: Money,
    pub regime: Regime,
}

impl MarketParams {
    /// Default price cap when a config omits it. Any cap above `h(v_bar)`
    /// works; doubling it keeps the verifier's deviation scan comfortably
    /// wide without inflating grids.
    pub fn default_p_max(premium: &QualityPremium, v_bar: f64) -> Money {
        2.0 * premium.h(v_bar)
    }
}

/// Monopoly price and the profit attained there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonopolyPoint {
    pub price: Money,
    pub profit: Money,
}

/// A market whose assumptions have all been checked.
///
/// Everything downstream consumes this wrapper; it caches the two
/// complete-information monopoly points computed during validation.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidatedMarket {
    params: MarketParams,
    good_monopoly: MonopolyPoint,
    bad_monopoly: MonopolyPoint,
}

impl ValidatedMarket {
    pub fn params(&self) -> &MarketParams {
        &self.params
    }

    pub fn mu0(&self) -> f64 {
        self.params.mu0
    }

    pub fn cost(&self, theta: FirmType) -> Money {
        match theta {
            FirmType::Good => self.params.c_g,
            FirmType::Bad => self.params.c_b,
        }
    }

    pub fn premium(&self) -> &QualityPremium {
        &self.params.premium
    }

    pub fn dist(&self) -> &ValuationDistribution {
        &self.params.dist
    }

    pub fn v_bar(&self) -> f64 {
        self.params.dist.v_bar()
    }

    pub fn p_max(&self) -> Money {
        self.params.p_max
    }

    pub fn regime(&self) -> Regime {
        self.params.regime
    }

    /// Cached complete-information monopoly point of the given type
    /// (belief 1 for the good type, 0 for the bad).
    pub fn monopoly_point(&self, theta: FirmType) -> MonopolyPoint {
        match theta {
            FirmType::Good => self.good_monopoly,
            FirmType::Bad => self.bad_monopoly,
        }
    }
}

const VALIDATION_GRID: usize = 10_000;
const PEAK_TOL: f64 = 1e-9;

/// Checks every regime-specific assumption and returns the validated market.
///
/// The error lists all violated assumptions by name. Validation is a pure
/// function of the parameters.
pub fn validate(params: MarketParams) -> Result<ValidatedMarket> {
    let mut violations = Vec::new();
    let v_bar = params.dist.v_bar();
    let h = &params.premium;

    if !(params.mu0 > 0.0 && params.mu0 < 1.0) {
        violations.push(MarketViolation::InvalidPrior(format!(
            "mu0 = {} must lie in (0, 1)",
            params.mu0
        )));
    }
    if v_bar <= 0.0 {
        violations.push(MarketViolation::SupportViolation(format!(
            "v_bar = {v_bar} must be positive"
        )));
    }
    if h.nu0 < 0.0 || h.nu1 < 0.0 {
        violations.push(MarketViolation::SupportViolation(format!(
            "premium coefficients (nu0, nu1) = ({}, {}) must be nonnegative",
            h.nu0, h.nu1
        )));
    }
    if h.h(v_bar) <= v_bar {
        violations.push(MarketViolation::SupportViolation(format!(
            "h(v_bar) = {} must exceed v_bar = {v_bar}",
            h.h(v_bar)
        )));
    }
    if params.p_max <= h.h(v_bar) {
        violations.push(MarketViolation::SupportViolation(format!(
            "p_max = {} must exceed h(v_bar) = {}",
            params.p_max,
            h.h(v_bar)
        )));
    }

    match params.regime {
        Regime::Positive => {
            if !(params.c_g > params.c_b && params.c_b > 0.0) {
                violations.push(MarketViolation::CostOrder(format!(
                    "positive correlation requires c_g > c_b > 0, got c_g = {}, c_b = {}",
                    params.c_g, params.c_b
                )));
            }
            if !(v_bar > params.c_g) {
                violations.push(MarketViolation::SupportViolation(format!(
                    "v_bar = {v_bar} must exceed c_g = {}",
                    params.c_g
                )));
            }
            if !(params.c_g >= h.h(0.0)) {
                violations.push(MarketViolation::SupportViolation(format!(
                    "c_g = {} must be at least h(0) = {}",
                    params.c_g,
                    h.h(0.0)
                )));
            }
        }
        Regime::Negative => {
            if params.c_g != 0.0 {
                violations.push(MarketViolation::CostOrder(format!(
                    "negative correlation normalises c_g = 0, got {}",
                    params.c_g
                )));
            }
            if !(params.c_b > 0.0 && params.c_b < v_bar) {
                violations.push(MarketViolation::CostOrder(format!(
                    "negative correlation requires 0 < c_b < v_bar, got c_b = {}",
                    params.c_b
                )));
            }
            if !(params.c_b >= h.h(0.0)) {
                violations.push(MarketViolation::SupportViolation(format!(
                    "c_b = {} must be at least h(0) = {}",
                    params.c_b,
                    h.h(0.0)
                )));
            }
        }
    }

    if !violations.is_empty() {
        return Err(Error::InvalidMarket(violations));
    }

    // Shape checks need the basic bounds above to already hold.
    let bad_profit = |p: f64| monopoly_profit_raw(p, 0.0, params.c_b, &params);
    let good_profit = |p: f64| monopoly_profit_raw(p, 1.0, params.c_g, &params);

    for (label, profit) in [("bad", &bad_profit as &dyn Fn(f64) -> f64), ("good", &good_profit)] {
        let samples: Vec<f64> = (0..VALIDATION_GRID)
            .map(|i| profit(params.p_max * i as f64 / (VALIDATION_GRID - 1) as f64))
            .collect();
        if count_peaks(&samples, PEAK_TOL) > 1 {
            violations.push(MarketViolation::SinglePeakViolation(format!(
                "{label}-type monopoly profit is not single-peaked on [0, p_max]"
            )));
        }
    }

    let bad_monopoly = monopoly_point_raw(FirmType::Bad, &params);
    let good_monopoly = monopoly_point_raw(FirmType::Good, &params);

    match params.regime {
        Regime::Positive => {
            // Trivial separation would let the good type reveal itself at no
            // cost; rule it out exactly as assumed.
            let d1_at_cg = 1.0 - params.dist.cdf(cutoff_raw(params.c_g, 1.0, &params));
            let trivial = bad_monopoly.price < params.c_g
                && bad_monopoly.profit >= (params.c_g - params.c_b) * d1_at_cg;
            if trivial {
                violations.push(MarketViolation::TrivialSeparation(format!(
                    "requires P_B^m >= c_g or pi_B^m < (c_g - c_b) * D^1(c_g); got P_B^m = {:.6}, pi_B^m = {:.6}, bound = {:.6}",
                    bad_monopoly.price,
                    bad_monopoly.profit,
                    (params.c_g - params.c_b) * d1_at_cg
                )));
            }
        }
        Regime::Negative => {
            // The good type's revenue P * D^1(P) must strictly increase up to
            // c_b; this pins the mixing construction's support and cdf.
            let n = VALIDATION_GRID;
            let mut prev = 0.0;
            let mut ok = true;
            for i in 1..n {
                let p = params.c_b * i as f64 / (n - 1) as f64;
                let rev = p * (1.0 - params.dist.cdf(cutoff_raw(p, 1.0, &params)));
                if rev <= prev {
                    ok = false;
                    break;
                }
                prev = rev;
            }
            if !ok {
                violations.push(MarketViolation::MonotonicityViolation(
                    "P * D^1(P) must strictly increase on [0, c_b]".into(),
                ));
            }
        }
    }

    if !violations.is_empty() {
        return Err(Error::InvalidMarket(violations));
    }

    Ok(ValidatedMarket {
        params,
        good_monopoly,
        bad_monopoly,
    })
}

/// Marginal consumer `v_mu(P)` without needing a validated market.
pub(crate) fn cutoff_raw(p: f64, mu: f64, params: &MarketParams) -> f64 {
    let v = (p - mu * params.premium.nu0) / (1.0 + mu * params.premium.nu1);
    v.clamp(0.0, params.dist.v_bar())
}

pub(crate) fn monopoly_profit_raw(p: f64, mu: f64, cost: f64, params: &MarketParams) -> f64 {
    (p - cost) * (1.0 - params.dist.cdf(cutoff_raw(p, mu, params)))
}

pub(crate) fn monopoly_point_raw(theta: FirmType, params: &MarketParams) -> MonopolyPoint {
    let (mu, cost) = match theta {
        FirmType::Good => (1.0, params.c_g),
        FirmType::Bad => (0.0, params.c_b),
    };
    let (price, profit) = grid_then_golden_max(
        |p| monopoly_profit_raw(p, mu, cost, params),
        0.0,
        params.p_max,
        VALIDATION_GRID,
        1e-10,
    );
    MonopolyPoint { price, profit }
}

// ---------------------------------------------------------------------------
// Config file format
// ---------------------------------------------------------------------------

/// Parses the flat key-value market description.
///
/// One `key = value` pair per line, `#` starts a comment. Keys: `mu0`, `c_g`,
/// `c_b`, `nu0`, `nu1`, `v_bar`, `dist_kind` (`uniform` | `piecewise`),
/// `dist_knots` (semicolon-separated `v:F` pairs, piecewise only), `p_max`
/// (optional, defaults to `2 * h(v_bar)`), `regime` (`positive` | `negative`).
pub fn parse_market_config(text: &str) -> Result<MarketParams> {
    let mut fields: std::collections::HashMap<&str, (usize, String)> =
        std::collections::HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config {
                line: line_no,
                msg: format!("expected `key = value`, got {line:?}"),
            });
        };
        let key = key.trim();
        let value = value.trim();
        const KEYS: [&str; 10] = [
            "mu0", "c_g", "c_b", "nu0", "nu1", "v_bar", "dist_kind", "dist_knots", "p_max",
            "regime",
        ];
        if !KEYS.contains(&key) {
            return Err(Error::Config {
                line: line_no,
                msg: format!("unknown key {key:?}"),
            });
        }
        if fields.insert(KEYS.iter().find(|k| **k == key).unwrap(), (line_no, value.to_string())).is_some() {
            return Err(Error::Config {
                line: line_no,
                msg: format!("duplicate key {key:?}"),
            });
        }
    }

    let number = |key: &str| -> Result<f64> {
        let (line, value) = fields
            .get(key)
            .ok_or_else(|| Error::Config {
                line: 0,
                msg: format!("missing required key {key:?}"),
            })?
            .clone();
        value.parse::<f64>().map_err(|_| Error::Config {
            line,
            msg: format!("key {key:?}: invalid number {value:?}"),
        })
    };

    let mu0 = number("mu0")?;
    let c_g = number("c_g")?;
    let c_b = number("c_b")?;
    let nu0 = number("nu0")?;
    let nu1 = number("nu1")?;
    let v_bar = number("v_bar")?;
    let premium = QualityPremium { nu0, nu1 };

    let dist = match fields.get("dist_kind") {
        None | Some((_, _)) if fields.get("dist_kind").map(|(_, v)| v.as_str()) == Some("uniform") || fields.get("dist_kind").is_none() => {
            ValuationDistribution::uniform(v_bar)
        }
        Some((line, kind)) if kind == "piecewise" => {
            let (kline, knots_str) = fields.get("dist_knots").ok_or_else(|| Error::Config {
                line: *line,
                msg: "dist_kind = piecewise requires dist_knots".into(),
            })?;
            let mut knots = Vec::new();
            for pair in knots_str.split(';') {
                let pair = pair.trim();
                if pair.is_empty() {
                    continue;
                }
                let Some((v, f)) = pair.split_once(':') else {
                    return Err(Error::Config {
                        line: *kline,
                        msg: format!("key \"dist_knots\": expected `v:F`, got {pair:?}"),
                    });
                };
                let parse = |s: &str| -> Result<f64> {
                    s.trim().parse::<f64>().map_err(|_| Error::Config {
                        line: *kline,
                        msg: format!("key \"dist_knots\": invalid number {s:?}"),
                    })
                };
                knots.push((parse(v)?, parse(f)?));
            }
            ValuationDistribution::piecewise(knots).map_err(|e| Error::Config {
                line: *kline,
                msg: format!("key \"dist_knots\": {e}"),
            })?
        }
        Some((line, kind)) => {
            return Err(Error::Config {
                line: *line,
                msg: format!("key \"dist_kind\": expected uniform or piecewise, got {kind:?}"),
            })
        }
    };

    let p_max = match fields.get("p_max") {
        Some((line, value)) => value.parse::<f64>().map_err(|_| Error::Config {
            line: *line,
            msg: format!("key \"p_max\": invalid number {value:?}"),
        })?,
        None => MarketParams::default_p_max(&premium, v_bar),
    };

    let regime = match fields.get("regime") {
        Some((_, v)) if v == "positive" => Regime::Positive,
        Some((_, v)) if v == "negative" => Regime::Negative,
        Some((line, v)) => {
            return Err(Error::Config {
                line: *line,
                msg: format!("key \"regime\": expected positive or negative, got {v:?}"),
            })
        }
        None => {
            return Err(Error::Config {
                line: 0,
                msg: "missing required key \"regime\"".into(),
            })
        }
    };

    Ok(MarketParams {
        mu0,
        c_g,
        c_b,
        premium,
        dist,
        p_max,
        regime,
    })
}

/// Renders a `MarketParams` back into the config format.
pub fn render_market_config(params: &MarketParams) -> String {
    let mut out = String::new();
    out.push_str(&format!("mu0 = {}\n", params.mu0));
    out.push_str(&format!("c_g = {}\n", params.c_g));
    out.push_str(&format!("c_b = {}\n", params.c_b));
    out.push_str(&format!("nu0 = {}\n", params.premium.nu0));
    out.push_str(&format!("nu1 = {}\n", params.premium.nu1));
    out.push_str(&format!("v_bar = {}\n", params.dist.v_bar()));
    match &params.dist {
        ValuationDistribution::Uniform { .. } => out.push_str("dist_kind = uniform\n"),
        ValuationDistribution::PiecewiseLinear { knots } => {
            out.push_str("dist_kind = piecewise\n");
            let knots = knots
                .iter()
                .map(|(v, f)| format!("{v}:{f}"))
                .collect::<Vec<_>>()
                .join("; ");
            out.push_str(&format!("dist_knots = {knots}\n"));
        }
    }
    out.push_str(&format!("p_max = {}\n", params.p_max));
    out.push_str(&format!(
        "regime = {}\n",
        match params.regime {
            Regime::Positive => "positive",
            Regime::Negative => "negative",
        }
    ));
    out
}

#[cfg(test)]
pub(crate) mod test_markets {
    use super::*;

    /// mu0 = 0.8, c_g = 0.3, c_b = 0.1, constant premium 0.3, uniform [0, 1].
    pub fn canonical_positive() -> ValidatedMarket {
        validate(MarketParams {
            mu0: 0.8,
            c_g: 0.3,
            c_b: 0.1,
            premium: QualityPremium::constant(0.3),
            dist: ValuationDistribution::uniform(1.0),
            p_max: 2.0,
            regime: Regime::Positive,
        })
        .unwrap()
    }

    /// mu0 = 0.5, c_b = 0.2, constant premium 0.1, uniform [0, 1].
    pub fn canonical_negative() -> ValidatedMarket {
        validate(MarketParams {
            mu0: 0.5,
            c_g: 0.0,
            c_b: 0.2,
            premium: QualityPremium::constant(0.1),
            dist: ValuationDistribution::uniform(1.0),
            p_max: 2.2,
            regime: Regime::Negative,
        })
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_markets::*;
    use super::*;

    #[test]
    fn canonical_positive_market_validates() {
        let m = canonical_positive();
        // Independent grid-argmax oracle for the no-trivial-separation check.
        let mut best = f64::NEG_INFINITY;
        let mut best_p = 0.0;
        for i in 0..20_000 {
            let p = 2.0 * i as f64 / 19_999.0;
            let profit = (p - 0.1) * (1.0 - p.clamp(0.0, 1.0));
            if profit > best {
                best = profit;
                best_p = p;
            }
        }
        assert!((best_p - 0.55).abs() < 1e-3);
        assert!(m.monopoly_point(FirmType::Bad).price >= m.cost(FirmType::Good));
    }

    #[test]
    fn canonical_negative_market_validates() {
        // Revenue P * D^1(P) = P for P < 0.1 and P(1.1 - P) above, both
        // strictly increasing on [0, 0.2].
        let m = canonical_negative();
        assert_eq!(m.regime(), Regime::Negative);
    }

    #[test]
    fn out_of_range_prior_rejected() {
        let mut params = canonical_positive().params().clone();
        params.mu0 = 1.2;
        let err = validate(params).unwrap_err();
        match err {
            Error::InvalidMarket(v) => {
                assert!(v.iter().any(|x| matches!(x, MarketViolation::InvalidPrior(_))));
            }
            other => panic!("expected InvalidMarket, got {other:?}"),
        }
    }

    #[test]
    fn cost_order_enforced_per_regime() {
        let mut params = canonical_positive().params().clone();
        params.c_b = 0.5; // above c_g
        assert!(matches!(validate(params), Err(Error::InvalidMarket(_))));

        let mut params = canonical_negative().params().clone();
        params.c_g = 0.05; // not normalised
        assert!(matches!(validate(params), Err(Error::InvalidMarket(_))));
    }

    #[test]
    fn validation_is_deterministic() {
        let params = canonical_negative().params().clone();
        let a = validate(params.clone()).unwrap();
        let b = validate(params).unwrap();
        assert_eq!(a.monopoly_point(FirmType::Good), b.monopoly_point(FirmType::Good));
    }

    #[test]
    fn premium_round_trip() {
        let h = QualityPremium { nu0: 0.1, nu1: 0.5 };
        for i in 0..=100 {
            let v = i as f64 / 100.0;
            assert!((h.h_inv(h.h(v)) - v).abs() < 1e-12);
            assert!(h.h(v) >= v);
        }
    }

    #[test]
    fn uniform_cdf_is_exact() {
        let d = ValuationDistribution::uniform(2.0);
        assert_eq!(d.cdf(0.5), 0.25);
        assert_eq!(d.cdf(2.0), 1.0);
        for i in 0..=50 {
            let u = i as f64 / 50.0;
            assert!((d.cdf(d.quantile(u)) - u).abs() < 1e-12);
        }
    }

    #[test]
    fn piecewise_cdf_round_trip() {
        let d = ValuationDistribution::piecewise(vec![(0.0, 0.0), (0.4, 0.7), (1.0, 1.0)]).unwrap();
        assert!((d.cdf(0.2) - 0.35).abs() < 1e-12);
        assert!((d.cdf(0.7) - 0.85).abs() < 1e-12);
        for i in 1..50 {
            let u = i as f64 / 50.0;
            assert!((d.cdf(d.quantile(u)) - u).abs() < 1e-12);
        }
        assert!(ValuationDistribution::piecewise(vec![(0.0, 0.0), (0.4, 0.4), (0.3, 1.0)]).is_err());
    }

    #[test]
    fn config_round_trip_and_errors() {
        let m = canonical_negative();
        let text = render_market_config(m.params());
        let parsed = parse_market_config(&text).unwrap();
        assert_eq!(&parsed, m.params());

        let err = parse_market_config("mu0 = banana\nregime = negative").unwrap_err();
        match err {
            Error::Config { line, msg } => {
                assert_eq!(line, 1);
                assert!(msg.contains("mu0"));
            }
            other => panic!("unexpected {other:?}"),
        }

        let err = parse_market_config("mu0 = 0.5\nwhatever = 3").unwrap_err();
        match err {
            Error::Config { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn config_defaults_p_max() {
        let text = "mu0 = 0.5\nc_g = 0\nc_b = 0.2\nnu0 = 0.1\nnu1 = 0\nv_bar = 1\nregime = negative\n";
        let parsed = parse_market_config(text).unwrap();
        assert!((parsed.p_max - 2.2).abs() < 1e-12);
        validate(parsed).unwrap();
    }
}
