//! Degree sequences and the inequality tests that act on them directly:
//! Erdős–Gallai graphicality, Rao's clique condition, the Yin–Li sufficient
//! condition, and the odd-length large-clique criterion used to recognise
//! the degree sequences of nontrivial basic graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A multiset of vertex degrees, stored non-increasing.
///
/// Graphicality is not enforced here; see [`is_graphic`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", from = "Vec<u32>")]
pub struct DegreeSequence {
    degrees: Vec<u32>,
    sum: u64,
}

impl DegreeSequence {
    /// Builds a sequence from degrees in any order.
    pub fn new(mut degrees: Vec<u32>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let sum = degrees.iter().map(|&d| u64::from(d)).sum();
        DegreeSequence { degrees, sum }
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// δ(D); zero for the empty sequence.
    pub fn min_degree(&self) -> u32 {
        self.degrees.last().copied().unwrap_or(0)
    }

    /// Δ(D); zero for the empty sequence.
    pub fn max_degree(&self) -> u32 {
        self.degrees.first().copied().unwrap_or(0)
    }

    /// The 1-based entry `d_i`.
    pub fn d(&self, i: usize) -> u32 {
        self.degrees[i - 1]
    }
}

impl From<Vec<u32>> for DegreeSequence {
    fn from(v: Vec<u32>) -> Self {
        DegreeSequence::new(v)
    }
}

impl From<DegreeSequence> for Vec<u32> {
    fn from(d: DegreeSequence) -> Self {
        d.degrees
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

/// Parses comma- and/or whitespace-separated non-negative integers.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    let degrees = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>().map_err(|_| Error::Parse {
                token: t.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DegreeSequence::new(degrees))
}

/// Erdős–Gallai test, evaluated on prefixes `{1..t}` only.
pub fn is_graphic(seq: &DegreeSequence) -> bool {
    if seq.sum() % 2 != 0 {
        return false;
    }
    let d = seq.degrees();
    let n = d.len();
    let mut prefix: u64 = 0;
    for t in 1..=n {
        prefix += u64::from(d[t - 1]);
        let tt = t as u64;
        let tail: u64 = d[t..].iter().map(|&x| u64::from(x).min(tt)).sum();
        if prefix > tt * (tt - 1) + tail {
            return false;
        }
    }
    true
}

/// Rao's characterisation: does some realization of `seq` contain a clique
/// on `k` vertices?
///
/// The double loop over `(s, t)` is evaluated in full.
pub fn rao_omega_at_least(seq: &DegreeSequence, k: usize) -> Result<bool> {
    let n = seq.len();
    if k < 1 || k > n {
        return Err(Error::Argument(format!(
            "clique size k = {k} must satisfy 1 <= k <= n = {n}"
        )));
    }
    if seq.sum() % 2 != 0 {
        return Ok(false);
    }
    let d: Vec<i64> = seq.degrees().iter().map(|&x| i64::from(x)).collect();
    let ki = k as i64;
    if d[k - 1] < ki - 1 {
        return Ok(false);
    }
    // prefix[i] = d_1 + ... + d_i
    let mut prefix = vec![0i64; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] + d[i];
    }
    for s in 0..=k {
        for t in 0..=(n - k) {
            let st = (s + t) as i64;
            let lhs = prefix[s] + (prefix[k + t] - prefix[k]) - st * (st - 1);
            let mut rhs = 0i64;
            for i in (s + 1)..=k {
                rhs += st.min(d[i - 1] + s as i64 - ki + 1);
            }
            for i in (k + t + 1)..=n {
                rhs += st.min(d[i - 1]);
            }
            if lhs > rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// ω(D), the largest clique over all realizations, via Rao's condition.
///
/// The empty sequence has ω = 0.
pub fn omega_of_sequence(seq: &DegreeSequence) -> Result<usize> {
    if !is_graphic(seq) {
        return Err(Error::Domain(format!("{seq} is not graphic")));
    }
    let n = seq.len();
    let start = n.min(seq.max_degree() as usize + 1);
    for k in (1..=start).rev() {
        if rao_omega_at_least(seq, k)? {
            return Ok(k);
        }
    }
    Ok(0)
}

/// Yin–Li sufficient condition for `ω(D) >= k`: `d_k >= k-1`, `n >= 2k`,
/// `d_{2k} >= k-2`. Vacuously true for `k = 0`.
pub fn yinli_sufficient(seq: &DegreeSequence, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = seq.len();
    if n < 2 * k {
        return false;
    }
    let ki = k as i64;
    i64::from(seq.d(k)) >= ki - 1 && i64::from(seq.d(2 * k)) >= ki - 2
}

/// Large-clique criterion for sequences of length `2k-1` with minimum
/// degree at least `k-1`:
///
/// `Σ_{i<k} (d_i - d_k) + Σ_{i>k} (d_k - d_i) >= 2k - 2 - d_k`.
///
/// Under those hypotheses this is equivalent to [`rao_omega_at_least`].
pub fn largecl_check(seq: &DegreeSequence, k: usize) -> Result<bool> {
    let n = seq.len();
    if k < 1 || n != 2 * k - 1 {
        return Err(Error::Argument(format!(
            "large-clique criterion needs n = 2k-1 (n = {n}, k = {k})"
        )));
    }
    let ki = k as i64;
    if i64::from(seq.d(n)) < ki - 1 {
        return Err(Error::Argument(format!(
            "large-clique criterion needs d_n >= k-1 (d_n = {}, k = {k})",
            seq.d(n)
        )));
    }
    let dk = i64::from(seq.d(k));
    let above: i64 = (1..k).map(|i| i64::from(seq.d(i)) - dk).sum();
    let below: i64 = (k + 1..=n).map(|i| dk - i64::from(seq.d(i))).sum();
    Ok(above + below >= 2 * ki - 2 - dk)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProfileVerdict {
    NotOddLength,
    MinDegTooLow,
    LargeCliqueExists,
    NontrivialBasicProfile,
}

/// Where a sequence sits relative to the degree sequences of nontrivial
/// basic graphs (`n = 2m+1`, `δ >= m`, no clique of order `m+1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicProfile {
    pub verdict: ProfileVerdict,
    /// Set whenever `n = 2m+1` is odd.
    pub m: Option<usize>,
}

pub fn classify_basic_profile(seq: &DegreeSequence) -> Result<BasicProfile> {
    if !is_graphic(seq) {
        return Err(Error::Domain(format!("{seq} is not graphic")));
    }
    let n = seq.len();
    if n % 2 == 0 {
        return Ok(BasicProfile {
            verdict: ProfileVerdict::NotOddLength,
            m: None,
        });
    }
    let m = (n - 1) / 2;
    let verdict = if (seq.min_degree() as usize) < m {
        ProfileVerdict::MinDegTooLow
    } else if largecl_check(seq, m + 1)? {
        ProfileVerdict::LargeCliqueExists
    } else {
        ProfileVerdict::NontrivialBasicProfile
    };
    Ok(BasicProfile {
        verdict,
        m: Some(m),
    })
}

/// How a reported number was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    OracleEnumeration,
    RaoExact,
    WitnessLowerBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stat {
    pub value: usize,
    pub method: Method,
}

impl Stat {
    pub fn new(value: usize, method: Method) -> Self {
        Stat { value, method }
    }
}

/// Sequence-level invariants: χ(D), ω(D), h1(D) and Δ(D).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceStats {
    pub chi: Option<Stat>,
    pub omega: Option<Stat>,
    pub h1: Option<Stat>,
    pub delta_max: usize,
}

impl SequenceStats {
    pub fn new(delta_max: usize) -> Self {
        SequenceStats {
            chi: None,
            omega: None,
            h1: None,
            delta_max,
        }
    }

    pub fn with_chi(mut self, value: usize, method: Method) -> Self {
        self.chi = Some(Stat::new(value, method));
        self
    }

    pub fn with_omega(mut self, value: usize, method: Method) -> Self {
        self.omega = Some(Stat::new(value, method));
        self
    }

    pub fn with_h1(mut self, value: usize, method: Method) -> Self {
        self.h1 = Some(Stat::new(value, method));
        self
    }

    /// `ω <= h1` when both are known (a clique is a degenerate witness).
    pub fn is_consistent(&self) -> bool {
        match (self.omega, self.h1) {
            (Some(o), Some(h)) => o.value <= h.value,
            _ => true,
        }
    }
}
