//! Profinite commensurability of pairs `Gamma_{m,n}`, `Gamma_{m',n'}` with
//! `m + n = m' + n'`, decided through the genus of `b_{m,n}`, and sweeps over
//! all such pairs up to a dimension bound.

use std::collections::BTreeMap;
use std::io;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::euler::{chi_closed, EulerError, EulerResult};
use crate::exactq::Rational;
use crate::ggroups::SpinGroupDescriptor;
use crate::qforms::{genus_comparison, GenusWitness, QformError, DEFAULT_PRIME_SWEEP};

#[derive(Debug, Error)]
pub enum ProfiniteError {
    #[error(transparent)]
    Euler(#[from] EulerError),
    #[error(transparent)]
    Qform(#[from] QformError),
    #[error("d_max must be at least 3, got {0}")]
    DimensionTooSmall(u32),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Congruence-kernel status: trivial when both rational Witt indices are at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CspNote {
    pub witt_indices: [u32; 2],
    pub kernel_trivial: bool,
    pub conclusion: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommensurabilityReport {
    pub pair: [SpinGroupDescriptor; 2],
    pub locally_equivalent: bool,
    pub witness: GenusWitness,
    pub csp_note: CspNote,
    pub dim_mod4_consistent: bool,
    pub delta_consistent: bool,
    pub sign_consistent: bool,
    pub chi_both: [EulerResult; 2],
}

impl CommensurabilityReport {
    /// Conclusions that local equivalence forces and that fail here.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.locally_equivalent {
            if !self.dim_mod4_consistent {
                v.push("dim X mod 4");
            }
            if !self.delta_consistent {
                v.push("delta");
            }
            if !self.sign_consistent {
                v.push("sign chi");
            }
        }
        v
    }

    /// `chi_1 / chi_2` when both are nonzero.
    pub fn chi_ratio(&self) -> Option<Rational> {
        let (a, b) = (&self.chi_both[0].value, &self.chi_both[1].value);
        (!a.is_zero() && !b.is_zero()).then(|| a / b)
    }
}

/// `Some(k)` if `r = +-2^k`.
pub fn power_of_two_exponent(r: &Rational) -> Option<i64> {
    let r = r.abs();
    let is_pow2 = |n: &num_bigint::BigInt| n.is_one() || n.magnitude().count_ones() == 1;
    if r.is_zero() || !is_pow2(r.numer()) || !is_pow2(r.denom()) {
        return None;
    }
    let e = |n: &num_bigint::BigInt| n.trailing_zeros().unwrap_or(0) as i64;
    Some(e(r.numer()) - e(r.denom()))
}

fn descriptor(m: u32, n: u32) -> Result<SpinGroupDescriptor, ProfiniteError> {
    SpinGroupDescriptor::new(m, n).map_err(|_| EulerError::InvalidPair { m, n }.into())
}

pub fn profinitely_commensurable(
    m: u32,
    n: u32,
    m2: u32,
    n2: u32,
) -> Result<CommensurabilityReport, ProfiniteError> {
    let (a, b) = (descriptor(m, n)?, descriptor(m2, n2)?);
    let chi_a = chi_closed(m, n)?;
    let chi_b = chi_closed(m2, n2)?;
    let genus = genus_comparison(m, n, m2, n2, DEFAULT_PRIME_SWEEP)?;
    let witt = [
        a.witt_index_rational().map_err(EulerError::from)?,
        b.witt_index_rational().map_err(EulerError::from)?,
    ];
    let kernel_trivial = witt.iter().all(|&w| w >= 2);
    let conclusion = match (genus.equal, kernel_trivial) {
        (false, _) => "not locally equivalent",
        (true, true) => "profinitely commensurable",
        (true, false) => "locally equivalent (commensurability conditional on congruence kernel)",
    };
    Ok(CommensurabilityReport {
        pair: [a, b],
        locally_equivalent: genus.equal,
        witness: genus.witness,
        csp_note: CspNote {
            witt_indices: witt,
            kernel_trivial,
            conclusion: conclusion.into(),
        },
        dim_mod4_consistent: a.dim_x() % 4 == b.dim_x() % 4,
        delta_consistent: a.delta() == b.delta(),
        sign_consistent: chi_a.sign == chi_b.sign,
        chi_both: [chi_a, chi_b],
    })
}

/// Flat view of a report for CSV output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRow {
    pub d: u32,
    pub m: u32,
    pub n: u32,
    pub m2: u32,
    pub n2: u32,
    pub locally_equivalent: bool,
    pub witness: String,
    pub dim_mod4_consistent: bool,
    pub delta_consistent: bool,
    pub sign_consistent: bool,
    pub chi: String,
    pub chi2: String,
    pub sign: i8,
    pub sign2: i8,
    pub witt: u32,
    pub witt2: u32,
    pub kernel_trivial: bool,
    /// `k` when `chi / chi2 = +-2^k`.
    pub chi_ratio_log2: Option<i64>,
}

impl From<&CommensurabilityReport> for PairRow {
    fn from(r: &CommensurabilityReport) -> Self {
        let [a, b] = r.pair;
        Self {
            d: a.d(),
            m: a.m,
            n: a.n,
            m2: b.m,
            n2: b.n,
            locally_equivalent: r.locally_equivalent,
            witness: r.witness.to_string(),
            dim_mod4_consistent: r.dim_mod4_consistent,
            delta_consistent: r.delta_consistent,
            sign_consistent: r.sign_consistent,
            chi: r.chi_both[0].factored_string(),
            chi2: r.chi_both[1].factored_string(),
            sign: r.chi_both[0].sign,
            sign2: r.chi_both[1].sign,
            witt: r.csp_note.witt_indices[0],
            witt2: r.csp_note.witt_indices[1],
            kernel_trivial: r.csp_note.kernel_trivial,
            chi_ratio_log2: r.chi_ratio().as_ref().and_then(power_of_two_exponent),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub d_max: u32,
    pub pairs_checked: usize,
    /// Local-equivalence classes with more than one member, per dimension.
    pub classes: Vec<Vec<(u32, u32)>>,
    pub locally_equivalent: Vec<PairRow>,
    /// `(m, n, m2, n2, failed conclusion)`.
    pub violations: Vec<(u32, u32, u32, u32, String)>,
    /// Locally equivalent pairs with nonzero chi whose ratio is not a power of 2.
    pub non_power_of_two_ratios: Vec<(u32, u32, u32, u32)>,
}

/// All reports for `m < m2`, `m + n = m2 + n2 = d`, `3 <= d <= d_max`, ordered by `(d, m, m2)`.
pub fn all_pairs(d_max: u32) -> Result<Vec<CommensurabilityReport>, ProfiniteError> {
    if d_max < 3 {
        return Err(ProfiniteError::DimensionTooSmall(d_max));
    }
    let jobs: Vec<(u32, u32, u32)> = (3..=d_max)
        .flat_map(|d| (1..d).flat_map(move |m| ((m + 1)..d).map(move |m2| (d, m, m2))))
        .collect();
    jobs.par_iter()
        .map(|&(d, m, m2)| profinitely_commensurable(m, d - m, m2, d - m2))
        .collect()
}

fn classes_of(reports: &[CommensurabilityReport], d_max: u32) -> Vec<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    for d in 3..=d_max {
        let mut root: BTreeMap<u32, u32> = (1..d).map(|m| (m, m)).collect();
        let find = |root: &BTreeMap<u32, u32>, mut x: u32| {
            while root[&x] != x {
                x = root[&x];
            }
            x
        };
        for r in reports
            .iter()
            .filter(|r| r.pair[0].d() == d && r.locally_equivalent)
        {
            let (x, y) = (find(&root, r.pair[0].m), find(&root, r.pair[1].m));
            if x != y {
                root.insert(x.max(y), x.min(y));
            }
        }
        let mut groups: BTreeMap<u32, Vec<(u32, u32)>> = BTreeMap::new();
        for m in 1..d {
            groups.entry(find(&root, m)).or_default().push((m, d - m));
        }
        out.extend(groups.into_values().filter(|g| g.len() > 1));
    }
    out
}

/// Checks that local equivalence forces equal `dim X mod 4`, `delta` and sign of `chi`.
pub fn sweep_theorem_frank_dim(d_max: u32) -> Result<SweepReport, ProfiniteError> {
    let reports = all_pairs(d_max)?;
    let mut violations = Vec::new();
    let mut non_power = Vec::new();
    let mut rows = Vec::new();
    for r in &reports {
        let [a, b] = r.pair;
        for v in r.violations() {
            violations.push((a.m, a.n, b.m, b.n, v.to_string()));
        }
        if r.locally_equivalent {
            let row = PairRow::from(r);
            if r.chi_ratio().is_some() && row.chi_ratio_log2.is_none() {
                non_power.push((a.m, a.n, b.m, b.n));
            }
            rows.push(row);
        }
    }
    Ok(SweepReport {
        d_max,
        pairs_checked: reports.len(),
        classes: classes_of(&reports, d_max),
        locally_equivalent: rows,
        violations,
        non_power_of_two_ratios: non_power,
    })
}

/// Locally equivalent pairs whose (nonzero) Euler characteristics differ.
pub fn sweep_euler_not_profinite(
    d_max: u32,
) -> Result<Vec<CommensurabilityReport>, ProfiniteError> {
    Ok(all_pairs(d_max)?
        .into_iter()
        .filter(|r| r.locally_equivalent)
        .filter(|r| r.chi_ratio().is_some_and(|q| !q.is_one()))
        .collect())
}

pub fn write_csv<W: io::Write>(rows: &[PairRow], out: W) -> Result<(), ProfiniteError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: io::Write, T: Serialize>(value: &T, mut out: W) -> Result<(), ProfiniteError> {
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::int;

    #[test]
    fn pair_8_2_and_4_6() {
        let r = profinitely_commensurable(8, 2, 4, 6).unwrap();
        assert!(r.locally_equivalent);
        assert_eq!(r.csp_note.witt_indices, [2, 4]);
        assert!(r.csp_note.kernel_trivial);
        assert_eq!(r.chi_both[0].factored_string(), "2^89 * 5^2 * 17");
        assert_eq!(r.chi_both[1].factored_string(), "2^90 * 5^2 * 17");
        assert!(r.violations().is_empty());
        assert_eq!(r.chi_ratio(), Some(Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn other_pairs() {
        let r = profinitely_commensurable(8, 2, 9, 1).unwrap();
        assert!(!r.locally_equivalent);
        assert_eq!(r.witness, GenusWitness::Place(3));

        let r = profinitely_commensurable(5, 5, 1, 9).unwrap();
        assert!(r.locally_equivalent);
        assert_eq!(r.chi_both[0].value, int(0));
        assert_eq!(r.chi_both[1].value, int(0));
        assert!(r.dim_mod4_consistent);

        let r = profinitely_commensurable(8, 2, 4, 4).unwrap();
        assert!(!r.locally_equivalent);
        assert_eq!(r.witness, GenusWitness::Rank);
    }

    #[test]
    fn sweep_up_to_ten() {
        let s = sweep_theorem_frank_dim(10).unwrap();
        assert!(s.violations.is_empty());
        assert!(s
            .classes
            .iter()
            .any(|c| c.contains(&(8, 2)) && c.contains(&(4, 6))));
        assert!(s
            .classes
            .iter()
            .any(|c| c.contains(&(5, 5)) && c.contains(&(1, 9))));
        let hits = sweep_euler_not_profinite(10).unwrap();
        assert!(hits
            .iter()
            .any(|r| (r.pair[0].m, r.pair[0].n, r.pair[1].m, r.pair[1].n) == (4, 6, 8, 2)));
        for r in &hits {
            assert_eq!(r.chi_both[0].sign, r.chi_both[1].sign);
        }
    }

    #[test]
    fn power_of_two() {
        assert_eq!(
            power_of_two_exponent(&Rational::new(1.into(), 8.into())),
            Some(-3)
        );
        assert_eq!(power_of_two_exponent(&int(-4)), Some(2));
        assert_eq!(power_of_two_exponent(&int(6)), None);
        assert_eq!(power_of_two_exponent(&int(1)), Some(0));
    }

    #[test]
    fn csv_rows() {
        let s = sweep_theorem_frank_dim(6).unwrap();
        let mut buf = Vec::new();
        write_csv(&s.locally_equivalent, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), s.locally_equivalent.len() + 1);
    }
}
