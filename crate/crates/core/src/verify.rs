//! Exhaustive verification sweeps over small shapes.
//!
//! Each suite expands into independent cases that run through
//! [`map_collect`], so the sweep is data-parallel when the `parallel`
//! feature is on.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::certificate::membership_certificate;
use crate::error::{Error, Result};
use crate::parallel::{map_collect, Execution};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::corner::{configurations, verify_corner_identities};
use crate::symmetric::{dn_fillings, dn_membership_certificate, realize_dn_tabloid};
use crate::symmetrizer::{
    brute_force_check, closed_form_multiplier, expand_product, garnir_zero, young_symmetrizer_in,
};
use crate::tableau::YoungTableau;
use crate::tensor::{realize_tabloid, shuffle_sum, subsets, Filling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Idempotence,
    Garnir,
    #[serde(rename = "thm12")]
    ClosedForm,
    #[serde(rename = "thm11")]
    Expansion,
    #[serde(rename = "section4")]
    SingleCorner,
    Shuffling,
    Certificates,
    Dn,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Idempotence,
        Suite::Garnir,
        Suite::ClosedForm,
        Suite::Expansion,
        Suite::SingleCorner,
        Suite::Shuffling,
        Suite::Certificates,
        Suite::Dn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Idempotence => "idempotence",
            Suite::Garnir => "garnir",
            Suite::ClosedForm => "thm12",
            Suite::Expansion => "thm11",
            Suite::SingleCorner => "section4",
            Suite::Shuffling => "shuffling",
            Suite::Certificates => "certificates",
            Suite::Dn => "dn",
        }
    }

    /// Default size bound. For `dn` this bounds the number of labels `n`
    /// (with `d ≤ 2`).
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Idempotence | Suite::ClosedForm => 7,
            Suite::Garnir | Suite::Expansion | Suite::SingleCorner => 6,
            Suite::Shuffling | Suite::Certificates => 5,
            Suite::Dn => 3,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Which suites to run and how far.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Overrides every suite's bound when set.
    pub max_n: Option<usize>,
    pub suites: Vec<Suite>,
    pub execution: Execution,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: None, suites: Suite::ALL.to_vec(), execution: Execution::default() }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(Error::Precondition("no suites selected".into()));
        }
        if self.max_n == Some(0) {
            return Err(Error::Precondition("max_n must be at least 1".into()));
        }
        Ok(())
    }

    /// Explicit bound, else `YSYM_MAX_N`, else the suite default.
    pub fn bound(&self, suite: Suite) -> usize {
        self.max_n
            .or_else(|| std::env::var("YSYM_MAX_N").ok().and_then(|v| v.trim().parse().ok()).filter(|&v| v > 0))
            .unwrap_or_else(|| suite.default_max_n())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseFailure {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<CaseFailure>,
    /// Expansion suite only: cases whose multiplier has integer coefficients.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral_cases: Option<usize>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.passed == self.cases
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
}

struct Outcome {
    case: String,
    result: Result<Option<String>>,
    integral: bool,
}

impl Outcome {
    fn check(case: String, ok: Result<bool>, what: &str) -> Self {
        Outcome { case, result: ok.map(|b| (!b).then(|| what.to_string())), integral: false }
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let suites: Vec<SuiteReport> = config.suites.iter().map(|&s| run_suite(s, config.bound(s), config.execution)).collect();
    Ok(SweepReport { pass: suites.iter().all(SuiteReport::pass), suites })
}

pub fn run_suite(suite: Suite, max_n: usize, exec: Execution) -> SuiteReport {
    let start = Instant::now();
    let outcomes = match suite {
        Suite::Idempotence => run_cases(exec, shapes(1, max_n), idempotence_case),
        Suite::Garnir => run_cases(exec, shapes(1, max_n), garnir_case),
        Suite::ClosedForm => run_cases(exec, corner_pairs(max_n), closed_form_case),
        Suite::Expansion => run_cases(exec, sub_pairs(max_n), expansion_case),
        Suite::SingleCorner => {
            run_cases(exec, (2..=max_n).flat_map(configurations).collect(), |(t, s)| corner_case(t, s))
        }
        Suite::Shuffling => run_cases(exec, shapes(1, max_n), shuffling_case),
        Suite::Certificates => run_cases(exec, shapes(1, max_n), certificate_case),
        Suite::Dn => run_cases(exec, dn_shapes(max_n), |(lam, d)| dn_case(lam, *d)),
    };
    let mut report = SuiteReport {
        suite,
        max_n,
        cases: outcomes.len(),
        passed: 0,
        failures: Vec::new(),
        integral_cases: (suite == Suite::Expansion).then_some(0),
        elapsed_ms: 0,
    };
    for o in outcomes {
        match o.result {
            Ok(None) => report.passed += 1,
            Ok(Some(detail)) => report.failures.push(CaseFailure { case: o.case, detail }),
            Err(e) => report.failures.push(CaseFailure { case: o.case, detail: format!("error: {e}") }),
        }
        if o.integral {
            *report.integral_cases.get_or_insert(0) += 1;
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

fn run_cases<T: Sync>(exec: Execution, items: Vec<T>, f: impl Fn(&T) -> Outcome + Sync + Send) -> Vec<Outcome> {
    map_collect(exec, &items, f)
}

fn shapes(lo: usize, hi: usize) -> Vec<Partition> {
    (lo..=hi).flat_map(Partition::all).collect()
}

fn corner_pairs(max_n: usize) -> Vec<(YoungTableau, YoungTableau)> {
    (2..=max_n).flat_map(configurations).collect()
}

fn sub_pairs(max_n: usize) -> Vec<(YoungTableau, YoungTableau)> {
    shapes(1, max_n)
        .into_iter()
        .flat_map(|lam| {
            let t = YoungTableau::canonical(&lam);
            lam.subpartitions()
                .into_iter()
                .filter(|mu| !mu.is_empty())
                .map(move |mu| (t.clone(), t.restrict(&mu).unwrap()))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn idempotence_case(lam: &Partition) -> Outcome {
    let run = || -> Result<bool> {
        let t = YoungTableau::canonical(lam);
        let c = young_symmetrizer_in(&t, lam.size())?.c;
        Ok(c.mul(&c)? == c.scale(&Rational::from_u128(lam.hook_alpha())))
    };
    Outcome::check(format!("({lam})"), run(), "c^2 != alpha*c")
}

fn garnir_case(lam: &Partition) -> Outcome {
    let run = || -> Result<Option<String>> {
        let t = YoungTableau::canonical(lam);
        let w = lam.width();
        for i in 1..=w {
            for j in (1..=w).filter(|&j| j != i && lam.col_len(i) <= lam.col_len(j)) {
                for a in t.column(i) {
                    if !garnir_zero(&t, i, j, a)?.is_zero() {
                        return Ok(Some(format!("nonzero at i={i} j={j} a={a}")));
                    }
                }
            }
        }
        Ok(None)
    };
    Outcome { case: format!("({lam})"), result: run(), integral: false }
}

fn closed_form_case((t, s): &(YoungTableau, YoungTableau)) -> Outcome {
    let run = || -> Result<bool> {
        let e = closed_form_multiplier(t, s)?;
        Ok(brute_force_check(t, s, &e.element)?.agrees())
    };
    Outcome::check(format!("{t} > {s}"), run(), "product mismatch")
}

fn expansion_case((t, s): &(YoungTableau, YoungTableau)) -> Outcome {
    let mut integral = false;
    let mut run = || -> Result<Option<String>> {
        let e = expand_product(t, s)?;
        integral = e.is_integral();
        let check = brute_force_check(t, s, &e.element)?;
        let flags = e.check(t, s)?;
        let mut bad = Vec::new();
        if !check.agrees() {
            bad.push("product identity");
        }
        if !flags.support_in_l_set {
            bad.push("support outside L(T;S)");
        }
        if !flags.identity_coefficient {
            bad.push("identity coefficient");
        }
        if !flags.sign_pattern {
            bad.push("sign pattern");
        }
        if check.product.is_zero() {
            bad.push("zero product");
        }
        Ok((!bad.is_empty()).then(|| bad.join(", ")))
    };
    let result = run();
    Outcome { case: format!("{t} > {s}"), result, integral }
}

fn corner_case(t: &YoungTableau, s: &YoungTableau) -> Outcome {
    let run = || -> Result<Option<String>> {
        let failed: Vec<String> =
            verify_corner_identities(t, s)?.into_iter().filter(|o| !o.pass).map(|o| o.id.to_string()).collect();
        Ok((!failed.is_empty()).then(|| failed.join(", ")))
    };
    Outcome { case: format!("{t} > {s}"), result: run(), integral: false }
}

/// Every filling of `lam` by `1..=n`.
pub fn all_fillings(lam: &Partition) -> Vec<Filling> {
    Permutation::all(lam.size())
        .map(|p| {
            let word: Vec<usize> = p.word().iter().map(|&e| e as usize).collect();
            let mut it = word.into_iter();
            Filling::new(lam.parts().iter().map(|&m| it.by_ref().take(m).collect()).collect()).unwrap()
        })
        .collect()
}

/// Column group of `f` as permutations of its entries.
fn column_group(f: &Filling) -> Vec<Permutation> {
    let n = f.size();
    let mut group = vec![Permutation::identity(n)];
    for col in f.columns() {
        let mut next = Vec::new();
        for p in Permutation::all(col.len()) {
            let mut w: Vec<usize> = (1..=n).collect();
            for (i, &x) in col.iter().enumerate() {
                w[x - 1] = col[p.apply(i + 1) - 1];
            }
            let q = Permutation::from_word(w).unwrap();
            next.extend(group.iter().map(|g| g.compose(&q).unwrap()));
        }
        group = next;
    }
    group
}

/// Both shuffling relations for a single filling.
pub fn check_shuffling(f: &Filling) -> Result<Option<String>> {
    let base = realize_tabloid(f)?;
    for sigma in column_group(f) {
        let moved = realize_tabloid(&f.act(&sigma)?)?;
        if moved != base.scale(&Rational::from(sigma.sign())) {
            return Ok(Some(format!("{f}: column sign fails for {sigma:?}")));
        }
    }
    let cols = f.columns();
    for i in 1..cols.len() {
        let (ci, cj) = (&cols[i - 1], &cols[i]);
        for sx in 0..=ci.len() {
            for sy in 0..=cj.len() {
                if sx + sy <= ci.len() {
                    continue;
                }
                for xs in subsets(ci, sx) {
                    for ys in subsets(cj, sy) {
                        if !shuffle_sum(f, &xs, &ys)?.is_zero() {
                            return Ok(Some(format!("{f}: shuffle sum nonzero for X={xs:?} Y={ys:?}")));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn shuffling_case(lam: &Partition) -> Outcome {
    let run = || -> Result<Option<String>> {
        for f in all_fillings(lam) {
            if let Some(msg) = check_shuffling(&f)? {
                return Ok(Some(msg));
            }
        }
        Ok(None)
    };
    Outcome { case: format!("({lam})"), result: run(), integral: false }
}

fn certificate_case(lam: &Partition) -> Outcome {
    let run = || -> Result<Option<String>> {
        for f in all_fillings(lam) {
            for k in (1..=lam.size()).filter(|&k| f.splits_at(k)) {
                let c = membership_certificate(&f, k)?;
                if !c.verify()? {
                    return Ok(Some(format!("{f} at k={k}: certificate does not verify")));
                }
                if !c.generators_dominate()? {
                    return Ok(Some(format!("{f} at k={k}: generator fails dominance")));
                }
            }
        }
        Ok(None)
    };
    Outcome { case: format!("({lam})"), result: run(), integral: false }
}

fn dn_shapes(max_n: usize) -> Vec<(Partition, usize)> {
    (1..=2).flat_map(|d| (1..=max_n).flat_map(move |n| Partition::all(n * d).map(move |lam| (lam, d)))).collect()
}

/// Relabeling invariance for every filling of `lam`, and certificates for
/// every split filling.
fn dn_case(lam: &Partition, d: usize) -> Outcome {
    let run = || -> Result<Option<String>> {
        let n = lam.size() / d;
        for f in dn_fillings(lam, d)? {
            let x = realize_dn_tabloid(&f, d)?;
            for sigma in Permutation::all(n) {
                if realize_dn_tabloid(&f.act(&sigma)?, d)? != x {
                    return Ok(Some(format!("{f}: relabeling by {sigma:?} changes the tabloid")));
                }
            }
            if f.columns().iter().any(|c| (1..c.len()).any(|i| c[..i].contains(&c[i]))) && !x.is_zero() {
                return Ok(Some(format!("{f}: repeated column entry but nonzero")));
            }
            for k in (1..=n).filter(|&k| f.splits_at(k)) {
                if !dn_membership_certificate(&f, d, k)?.verify()? {
                    return Ok(Some(format!("{f} at k={k}: certificate does not verify")));
                }
            }
        }
        Ok(None)
    };
    Outcome { case: format!("({lam}) d={d}"), result: run(), integral: false }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweep_passes() {
        let cfg = SweepConfig { max_n: Some(3), ..Default::default() };
        let report = run_sweep(&cfg).unwrap();
        for s in &report.suites {
            assert!(s.pass(), "{} {:?}", s.suite, s.failures);
            assert!(s.cases > 0, "{}", s.suite);
        }
        assert!(report.pass);
    }

    #[test]
    fn column_groups_have_the_right_size() {
        let f: Filling = "1,2,3/4,5/6".parse().unwrap();
        assert_eq!(column_group(&f).len(), 6 * 2);
    }
}
