//! Identity suites over parameter grids. Every row compares two canonical strings.

use crate::abelian::{gamma, q_pow_neg};
use crate::doubling::{alpha1, s_poly, zeta_integral_unramified, Alpha1Method};
use crate::exactring::{ExactError, FourthRoot, HalfInt, QConst, QValue, SArg, SConst, SValue};
use crate::localdata::{
    companion_space, conservation_check, kernel_dimension, make_space, make_space_with_kernel, CharKind, DualPair,
    FieldParams, HermitianSpace, QuadraticCharacter, R0Fixture,
};
use crate::report::SuiteResult;
use crate::theta::{
    alpha2, alpha2_closed_printed, alpha2_table_printed, alpha3, alpha3_from, gamma_transfer_ratio, steinberg_check,
    Alpha2Method, Alpha3Method,
};
use crate::volumes::{
    c1_volume, group_volume_anisotropic, iwahori_volume, kottwitz_index, kottwitz_sign, VolumeMethod,
};
use crate::{Error, Result};
use num::{BigRational, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::str::FromStr;

pub const SUITES: [&str; 8] =
    ["volumes", "alpha1", "alpha2", "alpha3", "gamma_transfer", "steinberg", "appendix", "conservation"];

/// The parameter grid shared by all suites.
#[derive(Clone, Debug, PartialEq)]
pub struct GridConfig {
    /// Restrict to one form sign of W; both when `None`.
    pub form_sign: Option<i8>,
    pub n_max: u32,
    pub e_values: Vec<u32>,
    pub v_min: i64,
    pub v_max: i64,
    pub chi_kinds: Vec<CharKind>,
    pub numeric_q: Vec<BigRational>,
    pub seed: u64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            form_sign: None,
            n_max: 8,
            e_values: vec![0, 1, 2],
            v_min: -3,
            v_max: 3,
            chi_kinds: vec![CharKind::Trivial, CharKind::Unramified, CharKind::Ramified],
            numeric_q: vec![BigRational::from_integer(3.into()), BigRational::from_integer(5.into())],
            seed: 0,
        }
    }
}

fn invalid(msg: String) -> Error {
    Error::Invalid(msg)
}

fn parse_list<T>(value: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty()).map(parse).collect()
}

fn parse_num<T: FromStr>(key: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| invalid(format!("{key}: cannot parse {s:?}")))
}

impl GridConfig {
    /// Applies one flat `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key {
            "form_sign" => {
                self.form_sign = match value {
                    "both" | "" => None,
                    s => Some(parse_num::<i8>(key, s)?),
                }
            }
            "n_max" => self.n_max = parse_num(key, value)?,
            "e" => self.e_values = parse_list(value, |s| parse_num(key, s))?,
            "v_min" => self.v_min = parse_num(key, value)?,
            "v_max" => self.v_max = parse_num(key, value)?,
            "chi_kinds" => {
                self.chi_kinds =
                    parse_list(value, |s| CharKind::parse(s).ok_or_else(|| invalid(format!("chi_kinds: unknown kind {s:?}"))))?
            }
            "numeric_q" => self.numeric_q = parse_list(value, |s| parse_num(key, s))?,
            "seed" => self.seed = parse_num(key, value)?,
            _ => return Err(invalid(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }

    /// Parses a flat `key = value` file; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = GridConfig::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| invalid(format!("line {}: expected key = value", i + 1)))?;
            cfg.set(k.trim(), v)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(s) = self.form_sign {
            if s != 1 && s != -1 {
                return Err(invalid(format!("form_sign must be 1, -1 or both, got {s}")));
            }
        }
        if self.n_max > 12 {
            return Err(invalid(format!("n_max must be <= 12, got {}", self.n_max)));
        }
        if self.e_values.is_empty() || self.e_values.iter().any(|&e| e > 2) {
            return Err(invalid(format!("e values must be a nonempty subset of 0,1,2, got {:?}", self.e_values)));
        }
        if self.v_min > self.v_max || self.v_min < -12 || self.v_max > 12 {
            return Err(invalid(format!("gram range must satisfy -12 <= v_min <= v_max <= 12, got {}..{}", self.v_min, self.v_max)));
        }
        if self.chi_kinds.is_empty() {
            return Err(invalid("chi_kinds must be nonempty".into()));
        }
        if self.numeric_q.iter().any(|q| *q <= BigRational::from_integer(1.into())) {
            return Err(invalid("numeric_q values must exceed 1".into()));
        }
        Ok(())
    }

    fn signs(&self) -> Vec<i8> {
        match self.form_sign {
            Some(s) => vec![s],
            None => vec![1, -1],
        }
    }

    fn v_range(&self) -> impl Iterator<Item = i64> {
        self.v_min..=self.v_max
    }

    /// Characters of the selected kinds; ramified ones have `a = 1` and either sign.
    pub fn characters(&self) -> Vec<QuadraticCharacter> {
        let mut out = Vec::new();
        for kind in &self.chi_kinds {
            match kind {
                CharKind::Trivial => out.push(QuadraticCharacter::trivial()),
                CharKind::Unramified => out.push(QuadraticCharacter::unramified()),
                CharKind::Ramified => {
                    out.push(QuadraticCharacter::ramified(1, 1).expect("valid"));
                    out.push(QuadraticCharacter::ramified(-1, 1).expect("valid"));
                }
            }
        }
        out
    }

    /// Valid spaces of the given sign and dimensions at `v = 0`, `e = 0`.
    fn spaces(&self, sign: i8, dims: impl Iterator<Item = u32> + Clone) -> Vec<HermitianSpace> {
        let mut out = Vec::new();
        for n in dims {
            for chi in self.characters() {
                if let Ok(w) = make_space(sign, n, chi, 0, FieldParams::new(0)) {
                    out.push(w);
                }
            }
        }
        out
    }

    /// Every `(W, V)` with `l = 1` and `n >= 1` over the grid.
    fn pairs(&self) -> Vec<DualPair> {
        let mut out = Vec::new();
        for sign in self.signs() {
            for w in self.spaces(sign, 1..=self.n_max) {
                for &e in &self.e_values {
                    for v in self.v_range() {
                        let w = w.with_gram(v).with_field(FieldParams::new(e));
                        for chi_v in self.characters() {
                            if let Ok(p) = companion_space(&w, chi_v, 0) {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn space_params(w: &HermitianSpace) -> Vec<(String, String)> {
    w.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn with_check(check: &str, mut params: Vec<(String, String)>) -> Vec<(String, String)> {
    params.insert(0, ("check".into(), check.into()));
    params
}

/// `ε = i` for ε² = -1 and `ε = 1` for ε² = 1, one admissible choice of values.
fn unit_values(c: &QConst) -> BTreeMap<String, FourthRoot> {
    c.units().map(|(id, sign)| (id.to_string(), FourthRoot(if sign == 1 { 0 } else { 1 }))).collect()
}

/// Exact values at each numeric q0, as a secondary check.
fn numeric_notes(c: &QConst, qs: &[BigRational]) -> String {
    qs.iter()
        .map(|q0| match c.evaluate(q0, &unit_values(c)) {
            Ok(x) => format!("q0={q0}: {x}"),
            // Odd powers of q^(1/2) at a non-square q0: show a decimal instead.
            Err(ExactError::Irrational) if !c.has_units() => {
                format!("q0={q0}: ~{:.9e}", c.scalar().approximate(q0.to_f64().unwrap_or(f64::NAN)))
            }
            Err(e) => format!("q0={q0}: {e}"),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn row(suite: &str, params: Vec<(String, String)>, lhs: String, rhs: String) -> SuiteResult {
    SuiteResult::new(suite, &params, lhs, rhs)
}

/// A row comparing two exact constants, with numeric notes from the left side.
fn const_row(suite: &str, params: Vec<(String, String)>, lhs: Result<QConst>, rhs: Result<QConst>, cfg: &GridConfig) -> SuiteResult {
    let notes = lhs.as_ref().map(|c| numeric_notes(c, &cfg.numeric_q)).unwrap_or_default();
    let show = |r: Result<QConst>| r.map(|c| c.to_string()).unwrap_or_else(|e| format!("error: {e}"));
    row(suite, params, show(lhs), show(rhs)).with_notes(notes)
}

fn q(c: QValue) -> QConst {
    QConst::new(c)
}

/// Sign pattern of a value at each q0: "+" per point when positive.
fn positivity(value: &QValue, qs: &[BigRational]) -> (String, String) {
    let signs: Vec<String> = qs
        .iter()
        .map(|q0| match value.sign_at(q0) {
            Ok(Ordering::Greater) => format!("q0={q0}:+"),
            Ok(Ordering::Equal) => format!("q0={q0}:0"),
            Ok(Ordering::Less) => format!("q0={q0}:-"),
            Err(e) => format!("q0={q0}:{e}"),
        })
        .collect();
    let expected: Vec<String> = qs.iter().map(|q0| format!("q0={q0}:+")).collect();
    (signs.join(","), expected.join(","))
}

/// Only hypothesis failures mean "route not applicable".
fn applicable<T>(r: &Result<T>) -> bool {
    !matches!(r, Err(Error::Hypothesis(_)))
}

pub fn run_suite(name: &str, cfg: &GridConfig) -> Result<Vec<SuiteResult>> {
    cfg.validate()?;
    let mut rows = match name {
        "all" => {
            let mut all = Vec::new();
            for s in SUITES {
                all.extend(run_suite(s, cfg)?);
            }
            return Ok(all);
        }
        "volumes" => volumes_suite(cfg),
        "alpha1" => alpha1_suite(cfg),
        "alpha2" => alpha2_suite(cfg),
        "alpha3" => alpha3_suite(cfg),
        "gamma_transfer" => gamma_transfer_suite(cfg),
        "steinberg" => steinberg_suite(),
        "appendix" => appendix_suite(cfg),
        "conservation" => conservation_suite(cfg),
        other => return Err(invalid(format!("unknown suite {other:?}; expected one of {SUITES:?} or all"))),
    };
    rows.sort_by(|a, b| a.params.cmp(&b.params));
    Ok(rows)
}

fn volumes_suite(cfg: &GridConfig) -> Vec<SuiteResult> {
    let s = "volumes";
    let mut rows = Vec::new();
    for sign in cfg.signs() {
        for w in cfg.spaces(sign, 0..=cfg.n_max) {
            let p = space_params(&w);
            let closed = iwahori_volume(&w, VolumeMethod::Closed);
            rows.push(const_row(
                s,
                with_check("iwahori_two_path", p.clone()),
                closed.clone().map(q),
                iwahori_volume(&w, VolumeMethod::Motive).map(q),
                cfg,
            ));
            if let Ok(b) = &closed {
                let (lhs, rhs) = positivity(b, &cfg.numeric_q);
                rows.push(row(s, with_check("iwahori_positive", p.clone()), lhs, rhs));
            }
            if w.is_anisotropic() {
                let g = group_volume_anisotropic(&w);
                let indexed = kottwitz_index(&w).and_then(|i| Ok(QValue::from_int(i as i64) * closed?));
                if let Ok(g) = &g {
                    let (lhs, rhs) = positivity(g, &cfg.numeric_q);
                    rows.push(row(s, with_check("group_positive", p.clone()), lhs, rhs));
                }
                rows.push(const_row(s, with_check("anisotropic_volume", p), g.map(q), indexed.map(q), cfg));
            }
        }
    }
    rows
}

fn alpha1_suite(cfg: &GridConfig) -> Vec<SuiteResult> {
    let s = "alpha1";
    let mut rows = Vec::new();
    if cfg.form_sign == Some(1) {
        return rows;
    }
    for w in cfg.spaces(-1, 0..=cfg.n_max) {
        for &e in &cfg.e_values {
            for v in cfg.v_range() {
                let w = w.with_gram(v).with_field(FieldParams::new(e));
                let p = space_params(&w);
                let general = alpha1(&w, Alpha1Method::ClosedGeneral);
                let uni = alpha1(&w, Alpha1Method::ClosedUnimodular);
                if applicable(&uni) {
                    rows.push(const_row(s, with_check("general_vs_unimodular", p.clone()), general.clone(), uni, cfg));
                }
                let aniso = alpha1(&w, Alpha1Method::ClosedAnisotropic);
                if applicable(&aniso) {
                    rows.push(const_row(s, with_check("general_vs_anisotropic", p.clone()), general.clone(), aniso.clone(), cfg));
                    let fe = alpha1(&w, Alpha1Method::FunctionalEquation);
                    rows.push(const_row(s, with_check("functional_equation_vs_anisotropic", p), fe, aniso, cfg));
                }
            }
        }
    }
    rows
}

fn pair_params(p: &DualPair) -> Vec<(String, String)> {
    p.params()
}

/// `[G(V) : B]` as a constant, for the table discrepancy rows.
fn alpha2_suite(cfg: &GridConfig) -> Vec<SuiteResult> {
    let s = "alpha2";
    let mut rows = Vec::new();
    for p in cfg.pairs() {
        let params = pair_params(&p);
        let closed = alpha2(&p, Alpha2Method::Closed);
        for method in [Alpha2Method::AnisotropicTable, Alpha2Method::ViaAlpha1, Alpha2Method::IwahoriSum] {
            let other = alpha2(&p, method);
            if applicable(&other) {
                let check = format!("{}_vs_closed", method.name());
                rows.push(const_row(s, with_check(&check, params.clone()), other, closed.clone(), cfg));
            }
        }
        // Displayed closed form over the consistent one: e(G), times ε(1/2, χ_W) on the skew side.
        let mut expected = q(QValue::from_int(kottwitz_sign(&p.w) as i64));
        if p.w.form_sign() == -1 {
            expected = expected * crate::abelian::eps_half(p.w.chi());
        }
        let ratio = alpha2_closed_printed(&p).and_then(|printed| Ok(printed * closed.clone()?.inv()));
        rows.push(const_row(s, with_check("printed_closed_discrepancy", params.clone()), ratio, Ok(expected), cfg));
        let printed = alpha2_table_printed(&p);
        if applicable(&printed) {
            let ratio = printed.and_then(|t| Ok(t * alpha2(&p, Alpha2Method::AnisotropicTable)?.inv()));
            let index = if p.w.form_sign() == 1 { kottwitz_index(&p.v).map(|i| i as i64) } else { Ok(1) };
            let expected = index.map(|i| q(QValue::from_ratio(1, i)));
            rows.push(const_row(s, with_check("printed_table_discrepancy", params.clone()), ratio, expected, cfg));
        }
        // α₂(v)·q^(vρ) does not depend on v.
        let shifted = closed.map(|c| c.scale(&p.w.gram_norm_pow(-p.rho())));
        let mut p0 = p.clone();
        p0.w = p.w.with_gram(0);
        rows.push(const_row(s, with_check("v_shift", params), shifted, alpha2(&p0, Alpha2Method::Closed), cfg));
    }
    rows
}

fn alpha3_suite(cfg: &GridConfig) -> Vec<SuiteResult> {
    let s = "alpha3";
    let mut rows = Vec::new();
    for p in cfg.pairs() {
        let params = pair_params(&p);
        let closed = alpha3(&p, Alpha3Method::Closed);
        for source in Alpha2Method::ALL {
            let via = alpha3_from(&p, Alpha3Method::ViaAlpha2, source);
            if applicable(&via) {
                let check = format!("via_alpha2_{}_vs_closed", source.name());
                rows.push(const_row(s, with_check(&check, params.clone()), via, closed.clone(), cfg));
            }
        }
        let mut p0 = p.clone();
        p0.w = p.w.with_gram(0);
        rows.push(const_row(
            s,
            with_check("v_independent", params),
            alpha3(&p, Alpha3Method::ViaAlpha2),
            alpha3(&p0, Alpha3Method::ViaAlpha2),
            cfg,
        ));
    }
    rows
}

fn sconst_row(suite: &str, params: Vec<(String, String)>, lhs: Result<SConst>, rhs: Result<SConst>) -> SuiteResult {
    let show = |r: Result<SConst>| r.map(|c| c.to_string()).unwrap_or_else(|e| format!("error: {e}"));
    row(suite, params, show(lhs), show(rhs))
}

fn gamma_transfer_suite(cfg: &GridConfig) -> Vec<SuiteResult> {
    let s = "gamma_transfer";
    let mut rows = Vec::new();
    for chi in cfg.characters() {
        let cp: Vec<(String, String)> = chi.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        for l in 1..=4i64 {
            let mut p = cp.clone();
            p.insert(0, ("l".into(), l.to_string()));
            let prod = gamma_transfer_ratio(l, &chi).and_then(|a| Ok(a * gamma_transfer_ratio(-l, &chi)?));
            rows.push(sconst_row(s, with_check("telescoping", p), prod, Ok(SConst::one())));
        }
        let g = gamma(SArg::S, &chi, false);
        rows.push(sconst_row(s, with_check("l_plus_one", cp.clone()), gamma_transfer_ratio(1, &chi), Ok(g.inv())));
        rows.push(sconst_row(s, with_check("l_minus_one", cp.clone()), gamma_transfer_ratio(-1, &chi), Ok(g)));
        // γ(s, χ, ψ)·γ(1 - s, χ, ψ̄) = 1 and γ(s, χ, ψ̄) = χ(-1)γ(s, χ, ψ)
        let fe = gamma(SArg::S, &chi, false) * gamma(SArg::S.reflect(), &chi, true);
        rows.push(sconst_row(s, with_check("abelian_functional_equation", cp.clone()), Ok(fe), Ok(SConst::one())));
        let conj = gamma(SArg::S, &chi, false).scale(&SValue::from_int(chi.sign() as i64));
        rows.push(sconst_row(s, with_check("abelian_conjugate", cp), Ok(gamma(SArg::S, &chi, true)), Ok(conj)));
    }
    rows
}

fn steinberg_suite() -> Vec<SuiteResult> {
    let params = vec![("check".to_string(), "steinberg".to_string())];
    match steinberg_check() {
        Ok(r) => row("steinberg", params, r.ratio.to_string(), r.half_gamma.to_string()).with_notes(format!(
            "deg St = {}; deg 1 = {}; adjoint gamma at -1/2 = {}",
            r.deg_steinberg, r.deg_trivial, r.adjoint_gamma
        )),
        Err(e) => row("steinberg", params, format!("error: {e}"), String::new()),
    }
    .into_iter_once()
}

trait OnceVec: Sized {
    fn into_iter_once(self) -> Vec<Self> {
        vec![self]
    }
}

impl OnceVec for SuiteResult {}

fn chi_for(kind: CharKind) -> QuadraticCharacter {
    match kind {
        CharKind::Trivial => QuadraticCharacter::trivial(),
        CharKind::Unramified => QuadraticCharacter::unramified(),
        CharKind::Ramified => QuadraticCharacter::ramified(-1, 1).expect("valid"),
    }
}

fn appendix_suite(cfg: &GridConfig) -> Vec<SuiteResult> {
    let s = "appendix";
    let mut rows = Vec::new();
    for sign in cfg.signs() {
        for w in cfg.spaces(sign, 0..=cfg.n_max) {
            let p = space_params(&w);
            if let Ok(sp) = s_poly(&w) {
                let lhs = format!("monic={},self_reciprocal={}", sp.is_monic(), sp.is_self_reciprocal());
                let notes = format!("deg S = {}, f_W = {}", sp.degree(), crate::doubling::f_w(&w));
                rows.push(row(s, with_check("s_poly", p.clone()), lhs, "monic=true,self_reciprocal=true".into()).with_notes(notes));
            }
            for v in cfg.v_range() {
                let wv = w.with_gram(v);
                if let Ok(c1) = c1_volume(&wv) {
                    let (lhs, rhs) = positivity(&c1, &cfg.numeric_q);
                    rows.push(row(s, with_check("c1_positive", space_params(&wv)), lhs, rhs));
                }
            }
            let shifts = vec![HalfInt::ZERO; w.r() as usize];
            let z = zeta_integral_unramified(&w, &shifts);
            let limit = z.map(|z| z.limit_at_infinity().finite().map(q).ok_or_else(|| Error::Pole("s = +inf".into())));
            rows.push(const_row(s, with_check("constant_term", p), limit.and_then(|x| x), c1_volume(&w).map(q), cfg));
        }
    }
    if cfg.form_sign != Some(1) {
        // The anisotropic kernels with their explicit Gram matrices.
        for fixture in R0Fixture::ALL.into_iter().filter(|f| f.form_sign() == -1) {
            let Ok(w) = make_space(-1, fixture.n0(), chi_for(fixture.chi_kind()), fixture.gram_val(), FieldParams::new(0))
            else {
                continue;
            };
            let mut p = space_params(&w);
            p.insert(0, ("fixture".into(), fixture.name().into()));
            let z = zeta_integral_unramified(&w, &[])
                .and_then(|z| z.substitute(w.rho()).finite().map(q).ok_or_else(|| Error::Pole(w.rho().to_string())));
            rows.push(const_row(s, with_check("zeta_at_rho_vs_alpha1", p), z, alpha1(&w, Alpha1Method::ClosedGeneral), cfg));
        }
    }
    rows
}

/// The two anisotropic kernel dimensions of the Witt towers sharing `(ε, χ)`.
fn tower_kernels(epsilon: i8, chi: &QuadraticCharacter) -> [u32; 2] {
    match (epsilon, chi.is_trivial()) {
        (1, _) => [0, 1],
        (_, true) => [0, 3],
        (_, false) => [1, 2],
    }
}

fn conservation_suite(cfg: &GridConfig) -> Vec<SuiteResult> {
    let s = "conservation";
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let chis = cfg.characters();
    let mut rows = Vec::new();
    let mut produced = 0;
    while produced < 1000 {
        let epsilon: i8 = match cfg.form_sign {
            // W.form_sign = -ε
            Some(sign) => -sign,
            None => if rng.gen_bool(0.5) { 1 } else { -1 },
        };
        let chi = if epsilon == 1 { QuadraticCharacter::trivial() } else { chis[rng.gen_range(0..chis.len())].clone() };
        let n = rng.gen_range(0..=cfg.n_max);
        let kernels = tower_kernels(epsilon, &chi);
        let which = rng.gen_range(0..2);
        let m0 = kernels[which];
        let total = 2 * n as i64 + 2 - epsilon as i64;
        let t = rng.gen_range(0..=(total.max(0) as u32) / 2);
        let m = (2 * t + m0) as i64;
        let m_dagger = total - m;
        let other = kernels[1 - which];
        if m_dagger < other as i64 {
            continue;
        }
        produced += 1;
        let dagger = make_space(epsilon, m_dagger as u32, chi.clone(), 0, FieldParams::new(0));
        let kernel = dagger.map(|d| d.n0().to_string()).unwrap_or_else(|e| format!("error: {e}"));
        let lhs = format!("conserved={};kernel={kernel}", conservation_check(m as u32, m_dagger as u32, n, epsilon));
        let rhs = format!("conserved=true;kernel={other}");
        let mut p: Vec<(String, String)> = vec![
            ("sample".into(), format!("{produced:04}")),
            ("eps".into(), epsilon.to_string()),
            ("n".into(), n.to_string()),
            ("m".into(), m.to_string()),
            ("m_dagger".into(), m_dagger.to_string()),
        ];
        p.extend(chi.params().into_iter().map(|(k, v)| (k.to_string(), v)));
        rows.push(row(s, with_check("tower_pair", p), lhs, rhs));
    }
    // Constructor rejects every kernel request that violates the classification.
    for i in 0..200 {
        let sign: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let chi = chis[rng.gen_range(0..chis.len())].clone();
        let n = rng.gen_range(0..=cfg.n_max);
        let n0 = rng.gen_range(0..=3u32);
        let valid = kernel_dimension(sign, n, &chi).is_ok_and(|k| k == n0 && k <= n);
        let got = make_space_with_kernel(sign, n, chi.clone(), 0, FieldParams::new(0), n0).is_ok();
        let p: Vec<(String, String)> = vec![
            ("sample".into(), format!("{i:04}")),
            ("form_sign".into(), sign.to_string()),
            ("n".into(), n.to_string()),
            ("n0".into(), n0.to_string()),
            ("chi".into(), chi.to_string()),
        ];
        rows.push(row(s, with_check("constructor", p), format!("accepted={got}"), format!("accepted={valid}")));
    }
    rows
}

/// `q^(-arg)` at a point, exposed for spot checks in the CLI.
pub fn q_pow_at(arg: SArg, s0: HalfInt) -> Option<QValue> {
    q_pow_neg(arg).substitute(s0).finite()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> GridConfig {
        GridConfig { n_max: 3, e_values: vec![0, 1], v_min: -1, v_max: 1, ..GridConfig::default() }
    }

    #[test]
    fn config_parsing() {
        let cfg = GridConfig::parse("n_max = 4\n# comment\ne = 0,1\nchi_kinds = trivial, ramified\nnumeric_q = 3, 9/4\n").unwrap();
        assert_eq!(cfg.n_max, 4);
        assert_eq!(cfg.e_values, vec![0, 1]);
        assert_eq!(cfg.chi_kinds, vec![CharKind::Trivial, CharKind::Ramified]);
        assert!(GridConfig::parse("n_max = 13").is_err());
        assert!(GridConfig::parse("colour = red").is_err());
        assert!(GridConfig::parse("e = 3").is_err());
    }

    #[test]
    fn suites_pass_on_small_grid() {
        for name in SUITES {
            let rows = run_suite(name, &small()).unwrap();
            assert!(!rows.is_empty(), "{name}");
            for r in &rows {
                assert!(r.equal, "{name}: {} : {} != {}", r.params, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn output_is_sorted_and_deterministic() {
        let a = run_suite("volumes", &small()).unwrap();
        let b = run_suite("volumes", &small()).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0].params <= w[1].params));
        assert!(run_suite("nope", &small()).is_err());
    }
}
