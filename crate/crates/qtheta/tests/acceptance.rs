//! End-to-end acceptance: every criterion at exact equality on the default grid.
//! Prints one PASS/FAIL line per criterion and exits nonzero if any criterion failed.

use num::{BigRational, Signed};
use qtheta::abelian::eps_half;
use qtheta::exactring::QValue;
use qtheta::localdata::QuadraticCharacter;
use qtheta::report::SuiteResult;
use qtheta::suites::{run_suite, GridConfig};
use qtheta::theta::{
    iwahori_theta_partial_sum, iwahori_theta_sum_closed, iwahori_theta_sum_expected, iwahori_theta_tail_bound,
    steinberg_check,
};
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

struct Rows(BTreeMap<&'static str, Vec<SuiteResult>>);

impl Rows {
    fn load(cfg: &GridConfig, suites: &[&'static str]) -> Self {
        Rows(suites.iter().map(|&s| (s, run_suite(s, cfg).unwrap())).collect())
    }

    fn check<'a>(&'a self, suite: &str, pred: impl Fn(&str) -> bool + 'a) -> impl Iterator<Item = &'a SuiteResult> + 'a {
        self.0[suite].iter().filter(move |r| pred(r.param("check").unwrap_or("")))
    }

    fn named<'a>(&'a self, suite: &str, name: &'a str) -> Vec<&'a SuiteResult> {
        self.check(suite, move |c| c == name).collect()
    }
}

/// Outcome of one criterion: pass flag and a short detail for the report line.
struct Verdict(bool, String);

fn all_equal(rows: &[&SuiteResult], label: &str) -> Verdict {
    let bad: Vec<String> = rows.iter().filter(|r| !r.equal).map(|r| r.params.clone()).collect();
    if rows.is_empty() {
        return Verdict(false, format!("{label}: no rows"));
    }
    match bad.first() {
        None => Verdict(true, format!("{label}: {} rows equal", rows.len())),
        Some(first) => Verdict(false, format!("{label}: {} of {} rows differ, first {first}", bad.len(), rows.len())),
    }
}

fn both(a: Verdict, b: Verdict) -> Verdict {
    Verdict(a.0 && b.0, format!("{}; {}", a.1, b.1))
}

fn kinds(rows: &[&SuiteResult]) -> BTreeSet<String> {
    rows.iter().filter_map(|r| r.param("chi_kind").map(str::to_string)).collect()
}

fn criterion1(rows: &Rows) -> Verdict {
    let r = rows.named("volumes", "iwahori_two_path");
    let signs: BTreeSet<_> = r.iter().filter_map(|x| x.param("form_sign")).collect();
    let max_n = r.iter().filter_map(|x| x.param("n")?.parse::<u32>().ok()).max();
    let v = all_equal(&r, "closed vs motive");
    let covered = signs.len() == 2 && max_n == Some(8) && kinds(&r).len() == 3;
    Verdict(v.0 && covered, format!("{}, form signs {signs:?}, n up to {max_n:?}, kinds {:?}", v.1, kinds(&r)))
}

fn criterion2(rows: &Rows) -> Verdict {
    let r = rows.named("volumes", "anisotropic_volume");
    // One row per line of the anisotropic table: (form sign, n, ramified).
    let table: BTreeSet<(&str, &str, bool)> = [
        ("1", "0", false),
        ("1", "1", false),
        ("-1", "0", false),
        ("-1", "1", false),
        ("-1", "1", true),
        ("-1", "2", false),
        ("-1", "2", true),
        ("-1", "3", false),
    ]
    .into();
    let seen: BTreeSet<(&str, &str, bool)> = r
        .iter()
        .map(|x| (x.param("form_sign").unwrap(), x.param("n").unwrap(), x.param("chi_kind") == Some("ramified")))
        .collect();
    let v = all_equal(&r, "index times Iwahori volume");
    Verdict(v.0 && seen == table, format!("{}, {} of {} table lines covered", v.1, seen.intersection(&table).count(), table.len()))
}

fn criterion3(rows: &Rows) -> Verdict {
    let a = all_equal(&rows.named("alpha1", "general_vs_unimodular"), "unimodular");
    let b = all_equal(&rows.named("alpha1", "general_vs_anisotropic"), "anisotropic");
    let c = all_equal(&rows.named("alpha1", "functional_equation_vs_anisotropic"), "functional equation");
    both(both(a, b), c)
}

fn criterion4(rows: &Rows) -> Verdict {
    let r: Vec<_> = rows.check("alpha2", |c| c.ends_with("_vs_closed")).collect();
    let methods: BTreeSet<_> = r.iter().filter_map(|x| x.param("check")).collect();
    let v = all_equal(&r, "alternative paths vs closed form");
    Verdict(v.0 && methods.len() == 3, format!("{}, paths {methods:?}", v.1))
}

fn criterion5(rows: &Rows) -> Verdict {
    let r: Vec<_> = rows.check("alpha3", |c| c.starts_with("via_alpha2_")).collect();
    let n1 = r.iter().filter(|x| x.param("W.n") == Some("1")).count();
    let signs: BTreeSet<_> = r.iter().filter_map(|x| x.param("W.form_sign")).collect();
    let v = all_equal(&r, "composition vs closed form");
    // ε(1/2, χ)^(-1) = χ(-1)·ε(1/2, χ) is what collapses the n = 1 case.
    let inverse_law = [QuadraticCharacter::ramified(1, 1).unwrap(), QuadraticCharacter::ramified(-1, 1).unwrap()]
        .iter()
        .all(|chi| eps_half(chi).inv() == eps_half(chi).scale(&QValue::from_int(chi.sign() as i64)));
    Verdict(
        v.0 && n1 > 0 && signs.len() == 2 && inverse_law,
        format!("{}, {n1} with n = 1, form signs {signs:?}, inverse law {inverse_law}", v.1),
    )
}

fn criterion6() -> Verdict {
    let closed = iwahori_theta_sum_closed().unwrap();
    let symbolic = closed == iwahori_theta_sum_expected();
    let q0 = BigRational::from_integer(3.into());
    let error = (iwahori_theta_partial_sum(50, &q0) - closed.evaluate(&q0).unwrap()).abs();
    let within = error <= iwahori_theta_tail_bound(50, &q0);
    Verdict(symbolic && within, format!("geometric series equals closed form: {symbolic}; truncation error within tail bound: {within}"))
}

fn criterion7() -> Verdict {
    let r = steinberg_check().unwrap();
    let one = QValue::one();
    let gamma = &r.half_gamma * &QValue::from_int(2);
    let resolved = gamma == &QValue::q_pow(1) / &(&one + &QValue::q_pow(-1));
    Verdict(r.equal && resolved, format!("ratio = half gamma: {}; gamma = q/(1+q^-1): {resolved}", r.equal))
}

fn criterion8(rows: &Rows) -> Verdict {
    let t = rows.named("gamma_transfer", "telescoping");
    let ls: BTreeSet<_> = t.iter().filter_map(|x| x.param("l")).collect();
    let a = all_equal(&t, "telescoping");
    let a = Verdict(a.0 && ls.len() == 4 && kinds(&t).len() == 3, format!("{} over l in {ls:?}", a.1));
    let mut ends = rows.named("gamma_transfer", "l_plus_one");
    ends.extend(rows.named("gamma_transfer", "l_minus_one"));
    both(a, all_equal(&ends, "l = +1, -1 products"))
}

fn criterion9(rows: &Rows) -> Verdict {
    let fe = rows.named("gamma_transfer", "abelian_functional_equation");
    let a = all_equal(&fe, "functional equation");
    let a = Verdict(a.0 && kinds(&fe).len() == 3, a.1);
    both(a, all_equal(&rows.named("gamma_transfer", "abelian_conjugate"), "conjugate additive character"))
}

fn criterion10(rows: &Rows, cfg: &GridConfig) -> Verdict {
    let s = all_equal(&rows.named("appendix", "s_poly"), "S(T) monic and self-reciprocal");
    let c = all_equal(&rows.named("appendix", "c1_positive"), "|C1| positive");
    let three_five = cfg.numeric_q == [BigRational::from_integer(3.into()), BigRational::from_integer(5.into())];
    let c = Verdict(c.0 && three_five, format!("{} at q0 in {{3, 5}}", c.1));
    let v2 = all_equal(&rows.named("alpha2", "v_shift"), "alpha2 v-shift");
    let v3 = all_equal(&rows.named("alpha3", "v_independent"), "alpha3 v-independence");
    both(both(s, c), both(v2, v3))
}

fn criterion11(rows: &Rows) -> Verdict {
    let pairs = rows.named("conservation", "tower_pair");
    let a = all_equal(&pairs, "conservation");
    let a = Verdict(a.0 && pairs.len() == 1000, a.1);
    let ctor = rows.named("conservation", "constructor");
    let rejected = ctor.iter().filter(|r| r.rhs == "accepted=false").count();
    let b = all_equal(&ctor, "constructor verdicts");
    both(a, Verdict(b.0 && rejected > 0, format!("{}, {rejected} invalid inputs rejected", b.1)))
}

fn main() {
    let start = Instant::now();
    let cfg = GridConfig::default();
    assert_eq!((cfg.n_max, cfg.v_min, cfg.v_max, cfg.e_values.clone()), (8, -3, 3, vec![0, 1, 2]));
    let rows = Rows::load(&cfg, &["volumes", "alpha1", "alpha2", "alpha3", "gamma_transfer", "appendix", "conservation"]);
    let verdicts = [
        criterion1(&rows),
        criterion2(&rows),
        criterion3(&rows),
        criterion4(&rows),
        criterion5(&rows),
        criterion6(),
        criterion7(),
        criterion8(&rows),
        criterion9(&rows),
        criterion10(&rows, &cfg),
        criterion11(&rows),
    ];
    for (i, Verdict(ok, detail)) in verdicts.iter().enumerate() {
        println!("criterion {:>2}: {} ({detail})", i + 1, if *ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    let failed: Vec<usize> = verdicts.iter().enumerate().filter(|(_, v)| !v.0).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
