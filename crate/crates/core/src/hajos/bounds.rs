//! The chromatic bounds for degree sequences, evaluated in exact rational
//! arithmetic.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::sequence::SequenceStats;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Holds,
    Tight,
    Violated,
    NotEvaluated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub status: BoundStatus,
    /// Right-hand side minus left-hand side, in the inequality's own units.
    #[serde(serialize_with = "ratio_text")]
    pub slack: Option<Rational>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub missing: Vec<&'static str>,
}

fn ratio_text<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}

impl BoundCheck {
    fn from_slack(slack: Rational) -> Self {
        let zero = Rational::from_integer(0);
        let status = if slack > zero {
            BoundStatus::Holds
        } else if slack == zero {
            BoundStatus::Tight
        } else {
            BoundStatus::Violated
        };
        BoundCheck {
            status,
            slack: Some(slack),
            missing: Vec::new(),
        }
    }

    fn missing(fields: Vec<&'static str>) -> Self {
        BoundCheck {
            status: BoundStatus::NotEvaluated,
            slack: None,
            missing: fields,
        }
    }

    pub fn slack_f64(&self) -> Option<f64> {
        self.slack.map(|q| *q.numer() as f64 / *q.denom() as f64)
    }

    pub fn is_violated(&self) -> bool {
        self.status == BoundStatus::Violated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// `χ <= 6/5 ω + 3/5`
    pub sf: BoundCheck,
    /// `χ <= 4/5 ω + 1/5 Δ + 1`
    pub reed: BoundCheck,
    /// `ω >= 5/6 χ - 1/2`
    pub hajos2_a: BoundCheck,
    /// `ω >= 5/4 χ - 1/4 Δ - 5/4`
    pub hajos2_b: BoundCheck,
    /// `χ <= h1`
    pub hajos: BoundCheck,
}

impl BoundReport {
    pub fn checks(&self) -> [(&'static str, &BoundCheck); 5] {
        [
            ("sf", &self.sf),
            ("reed", &self.reed),
            ("hajos2_a", &self.hajos2_a),
            ("hajos2_b", &self.hajos2_b),
            ("hajos", &self.hajos),
        ]
    }

    pub fn any_violated(&self) -> bool {
        self.checks().iter().any(|(_, c)| c.is_violated())
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

pub fn check_bounds(stats: &SequenceStats) -> BoundReport {
    let chi = stats.chi.map(|s| int(s.value));
    let omega = stats.omega.map(|s| int(s.value));
    let h1 = stats.h1.map(|s| int(s.value));
    let delta = int(stats.delta_max);
    let need = |pairs: &[(&'static str, bool)]| -> Vec<&'static str> {
        pairs
            .iter()
            .filter(|(_, present)| !present)
            .map(|(n, _)| *n)
            .collect()
    };
    let with_chi_omega = |f: &dyn Fn(Rational, Rational) -> Rational| match (chi, omega) {
        (Some(c), Some(o)) => BoundCheck::from_slack(f(c, o)),
        _ => BoundCheck::missing(need(&[("chi", chi.is_some()), ("omega", omega.is_some())])),
    };
    BoundReport {
        sf: with_chi_omega(&|c, o| q(6, 5) * o + q(3, 5) - c),
        reed: with_chi_omega(&|c, o| q(4, 5) * o + q(1, 5) * delta + int(1) - c),
        hajos2_a: with_chi_omega(&|c, o| o - (q(5, 6) * c - q(1, 2))),
        hajos2_b: with_chi_omega(&|c, o| o - (q(5, 4) * c - q(1, 4) * delta - q(5, 4))),
        hajos: match (chi, h1) {
            (Some(c), Some(h)) => BoundCheck::from_slack(h - c),
            _ => BoundCheck::missing(need(&[("chi", chi.is_some()), ("h1", h1.is_some())])),
        },
    }
}
