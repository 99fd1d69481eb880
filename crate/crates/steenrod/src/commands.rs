//! Command implementations. Each returns the rendered output and a verdict
//! so the binary only has to print and pick an exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use steenrod_core::cobar_ss::{
    a1_cotor_extension, adams_e2_vanishing_report, ce_e2_by_cobar, ce_edge_ranks, ce_spectral_sequence, cobar_cotor,
    ext_for_abutment, verify_a1_to_cotor_vanishing, verify_a_leqk_vanishing, AdamsSpec, MapControl, VanishingTable,
};
use steenrod_core::comodule::ComoduleWindow;
use steenrod_core::dual_hopf::{dual_axioms, duality_check, parse_dual, steenrod_axioms, DualSpec};
use steenrod_core::milnor::{parse_milnor, poincare_duality_check, Profile};
use steenrod_core::module_cat::{
    hom_to_free_vanishing, moore_module, random_finite_module, FinModule, FiniteAlgebra,
};

use crate::cache::{ext_dims, Cache};
use crate::chart::{render, render_page, Cells, Format};
use crate::comodule_json;
use crate::header::Header;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn config(e: impl std::fmt::Display) -> CliError {
    CliError::Config(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Plain output, nothing claimed.
    None,
    Confirmed,
    Falsified,
}

impl Verdict {
    pub fn from_bool(holds: bool) -> Verdict {
        if holds {
            Verdict::Confirmed
        } else {
            Verdict::Falsified
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::None | Verdict::Confirmed => 0,
            Verdict::Falsified => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub verdict: Verdict,
}

impl Outcome {
    fn plain(text: String) -> Self {
        Outcome { text, verdict: Verdict::None }
    }
}

/// `A(n)`, `E(n)` or `A` (the whole algebra, truncated at the window).
pub fn parse_profile(s: &str) -> Result<Profile, CliError> {
    let s = s.trim();
    if s == "A" {
        return Ok(Profile::full());
    }
    let (kind, rest) = s.split_at(1.min(s.len()));
    let n = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|r| r.parse::<u32>().ok())
        .ok_or_else(|| config(format!("unrecognized algebra {:?}; expected A, A(n) or E(n)", s)))?;
    match kind {
        "A" if n <= 3 => Ok(Profile::a(n)),
        "E" if n <= 4 => Ok(Profile::e(n)),
        _ => Err(config(format!("unsupported algebra {:?}", s))),
    }
}

pub fn algebra(profile: &Profile, window: u32) -> Result<FiniteAlgebra, CliError> {
    if profile.is_finite() {
        FiniteAlgebra::profile(profile).map_err(config)
    } else {
        Ok(FiniteAlgebra::truncated(profile, window))
    }
}

/// `k`, `moore` (the Moore-space module A(0)), or `random:<seed>`.
pub fn parse_module(alg: &FiniteAlgebra, s: &str) -> Result<FinModule, CliError> {
    match s {
        "k" => Ok(FinModule::trivial(alg, 0)),
        "moore" | "A(0)" => Ok(moore_module(alg)),
        _ => {
            if let Some(seed) = s.strip_prefix("random:") {
                let seed: u64 = seed.parse().map_err(|_| config(format!("bad seed in {:?}", s)))?;
                Ok(random_finite_module(alg, seed, 8))
            } else {
                Err(config(format!("unrecognized module {:?}; expected k, moore or random:<seed>", s)))
            }
        }
    }
}

pub fn cmd_mul(expr: &str, dual: bool) -> Result<Outcome, CliError> {
    let text = if dual {
        let (p, spec) = parse_dual(expr).map_err(config)?;
        if spec.is_full() {
            format!("{}\n", p)
        } else {
            format!("{}\n", p.display_in(&spec))
        }
    } else {
        format!("{}\n", parse_milnor(expr).map_err(config)?)
    };
    Ok(Outcome::plain(text))
}

pub struct ExtChart<'a> {
    pub algebra: &'a str,
    pub coeffs: &'a str,
    pub s_max: u32,
    pub t_max: Option<u32>,
    /// Keep only t − s ≤ range; sets t_max = s_max + range when t_max is absent.
    pub range: Option<u32>,
}

pub fn cmd_chart_ext(p: &ExtChart, format: Format, seed: u64, cache: &Cache) -> Result<Outcome, CliError> {
    let t_max = match (p.t_max, p.range) {
        (Some(t), _) => t,
        (None, Some(r)) => p.s_max + r,
        (None, None) => p.s_max + 12,
    };
    let profile = parse_profile(p.algebra)?;
    let alg = algebra(&profile, t_max)?;
    let m = parse_module(&alg, p.coeffs)?;
    let (res, _) = cache.resolution(&alg, &m, p.s_max, t_max)?;
    let mut cells = ext_dims(&res);
    if let Some(r) = p.range {
        cells.retain(|&(s, t), _| t >= s && t - s <= r);
    }
    let mut h = Header::new("chart ext", "ext-chart", seed)
        .param("algebra", alg.name())
        .param("coeffs", m.name())
        .param("s_max", p.s_max)
        .param("t_max", t_max);
    if let Some(r) = p.range {
        h = h.param("range", r);
    }
    Ok(Outcome::plain(render(&h, &cells, format)))
}

fn load_coefficients(spec: &DualSpec, coeffs: &str, window: u32) -> Result<ComoduleWindow, CliError> {
    if coeffs == "k" {
        return Ok(ComoduleWindow::ground(spec.clone(), window));
    }
    let path = coeffs
        .strip_prefix("file:")
        .ok_or_else(|| config(format!("unrecognized coefficients {:?}; expected k or file:<path>", coeffs)))?;
    let m = comodule_json::from_json(&std::fs::read_to_string(path)?).map_err(config)?;
    if m.coalgebra() != spec {
        return Err(config(format!("{} is a comodule over {}, not {}", path, m.coalgebra(), spec)));
    }
    Ok(m)
}

pub fn cmd_chart_cotor(
    coalgebra: &str,
    coeffs: &str,
    s_max: u32,
    t_max: u32,
    format: Format,
    seed: u64,
) -> Result<Outcome, CliError> {
    let spec = DualSpec::parse(coalgebra).map_err(config)?;
    let m = load_coefficients(&spec, coeffs, t_max)?;
    let c = cobar_cotor(&spec, &m, s_max, t_max).map_err(config)?;
    let cells: Cells = c.dims();
    let h = Header::new("chart cotor", "cotor-chart", seed)
        .param("coalgebra", spec.name())
        .param("coeffs", coeffs)
        .param("s_max", s_max)
        .param("t_max", t_max);
    Ok(Outcome::plain(render(&h, &cells, format)))
}

pub struct PageChart<'a> {
    pub sub: &'a str,
    pub big: &'a str,
    pub coeffs: &'a str,
    pub page: u32,
    pub s_max: u32,
    pub t_max: u32,
}

pub fn cmd_chart_ss_page(p: &PageChart, format: Format, seed: u64) -> Result<Outcome, CliError> {
    let sub = parse_profile(p.sub)?;
    let big = parse_profile(p.big)?;
    let big_alg = algebra(&big, p.t_max)?;
    let m = parse_module(&big_alg, p.coeffs)?;
    let ss = ce_spectral_sequence(&sub, &big, &m, p.s_max, p.t_max).map_err(config)?;
    let page = ss.page(p.page).unwrap_or_else(|| ss.e_infinity());
    let h = Header::new("chart ss-page", "ce-spectral-sequence", seed)
        .param("sub", &ss.sub)
        .param("big", &ss.big)
        .param("coeffs", m.name())
        .param("page", page.r)
        .param("s_max", p.s_max)
        .param("t_max", p.t_max);
    Ok(Outcome::plain(render_page(&h, page, format)))
}

fn report(header: &Header, body: &str, verdict: Verdict) -> Outcome {
    let mut text = header.comment_block();
    text.push_str(body);
    let _ = writeln!(
        text,
        "verdict: {}",
        match verdict {
            Verdict::Confirmed => "confirmed",
            Verdict::Falsified => "falsified",
            Verdict::None => "n/a",
        }
    );
    Outcome { text, verdict }
}

pub fn cmd_verify_poincare(n: u32, seed: u64) -> Result<Outcome, CliError> {
    if n > 3 {
        return Err(config("poincare: n must be at most 3"));
    }
    let h = Header::new("verify poincare", "poincare-duality", seed).param("n", n);
    let mut body = String::new();
    let verdict = match poincare_duality_check(n) {
        Ok(w) => {
            let _ = writeln!(body, "pd={}", w.pd);
            let _ = writeln!(body, "degree\tdim\tpairing_rank");
            for (k, (&d, &r)) in w.dims.iter().zip(&w.pairing_ranks).enumerate() {
                let _ = writeln!(body, "{}\t{}\t{}", k, d, r);
            }
            Verdict::Confirmed
        }
        Err(e) => {
            let _ = writeln!(body, "witness: {}", e);
            Verdict::Falsified
        }
    };
    Ok(report(&h, &body, verdict))
}

pub fn cmd_verify_hopf_axioms(degree: u32, duality_degree: u32, seed: u64) -> Result<Outcome, CliError> {
    if degree > 32 || duality_degree > 24 {
        return Err(config("hopf-axioms: degree at most 32, duality degree at most 24"));
    }
    let h = Header::new("verify hopf-axioms", "hopf-axioms", seed)
        .param("degree", degree)
        .param("duality_degree", duality_degree);
    let mut checks = steenrod_axioms(degree);
    checks.extend(dual_axioms(degree));
    checks.push(duality_check(duality_degree));
    let mut body = String::from("check\tdegree\tcases\tfailures\n");
    for c in &checks {
        let _ = writeln!(body, "{}\t{}\t{}\t{}", c.name, c.degree, c.cases, c.failures.len());
        for f in &c.failures {
            let _ = writeln!(body, "  witness: {}", f);
        }
    }
    Ok(report(&h, &body, Verdict::from_bool(checks.iter().all(|c| c.holds()))))
}

pub struct PalgParams<'a> {
    pub module: &'a str,
    pub witness: u32,
    pub window: u32,
    /// Degenerate the window algebra's products from this degree on.
    pub degenerate_from: Option<u32>,
}

pub fn cmd_verify_palg_finite(p: &PalgParams, seed: u64) -> Result<Outcome, CliError> {
    if p.witness == 0 || p.witness > 2 {
        return Err(config("palg-finite: witness must be 1 or 2"));
    }
    let mut alg = FiniteAlgebra::truncated(&Profile::full(), p.window);
    if let Some(d) = p.degenerate_from {
        alg = alg.degenerate_from(d);
    }
    let m = parse_module(&alg, p.module)?;
    let cert = hom_to_free_vanishing(&m, &alg, p.witness, &[0]).map_err(config)?;
    let mut h = Header::new("verify palg-finite", "hom-to-free-vanishing", seed)
        .param("module", m.name())
        .param("window", p.window)
        .param("witness", &cert.witness);
    if let Some(d) = p.degenerate_from {
        h = h.param("degenerate_from", d);
    }
    let mut body = String::from("image_degree\tdim\trank\n");
    for c in &cert.checks {
        let _ = writeln!(body, "{}\t{}\t{}", c.degree, c.dim, c.rank);
        for (v, z) in &c.witnesses {
            let _ = writeln!(body, "  {} acts nontrivially on {}", z, v);
        }
    }
    body.push_str("shift\thom_dim\n");
    for (s, d) in &cert.direct {
        let _ = writeln!(body, "{}\t{}", s, d);
    }
    Ok(report(&h, &body, Verdict::from_bool(cert.holds)))
}

pub fn parse_control(s: &str) -> Result<MapControl, CliError> {
    match s {
        "none" => Ok(MapControl::None),
        "drop-q0-term" => Ok(MapControl::DropQ0Term),
        "trivialize-source" => Ok(MapControl::TrivializeSource),
        "trivialize-target" => Ok(MapControl::TrivializeTarget),
        _ => Err(config(format!(
            "unknown mutation {:?}; expected none, drop-q0-term, trivialize-source or trivialize-target",
            s
        ))),
    }
}

fn control_name(c: MapControl) -> &'static str {
    match c {
        MapControl::None => "none",
        MapControl::DropQ0Term => "drop-q0-term",
        MapControl::TrivializeSource => "trivialize-source",
        MapControl::TrivializeTarget => "trivialize-target",
    }
}

fn table_body(t: &VanishingTable) -> String {
    let mut body = format!("maps: {}\nshift\tdim\tdims_by_degree\n", t.label);
    for r in &t.rows {
        let trace: Vec<String> = r.trace.iter().map(|(d, n)| format!("{}:{}", d, n)).collect();
        let _ = writeln!(body, "{}\t{}\t{}", r.shift, r.dim, trace.join(","));
    }
    for r in t.nonzero() {
        if let Some(w) = &r.witness {
            let images: Vec<String> = w
                .images
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(x, v)| format!("{}->{:?}", x, v.iter_ones().collect::<Vec<_>>()))
                .collect();
            let _ = writeln!(body, "witness shift {}: {}", r.shift, images.join(" "));
        }
    }
    body
}

pub fn cmd_verify_a1_cotor(k: u32, degree: u32, extend: Option<u32>, mutate: &str, seed: u64) -> Result<Outcome, CliError> {
    if k > 3 || degree > 24 {
        return Err(config("a1-cotor: k at most 3, degree at most 24"));
    }
    let control = parse_control(mutate)?;
    let extend = extend.unwrap_or_else(|| a1_cotor_extension(degree));
    let t = verify_a1_to_cotor_vanishing(k, degree, extend, control).map_err(config)?;
    let h = Header::new("verify a1-cotor", "a1-to-cotor-vanishing", seed)
        .param("k", k)
        .param("degree", degree)
        .param("extend_to", t.extend_to)
        .param("mutate", control_name(control));
    Ok(report(&h, &table_body(&t), Verdict::from_bool(t.is_zero())))
}

pub fn cmd_verify_a_leqk(k: u32, degree: u32, extend: Option<u32>, mutate: &str, seed: u64) -> Result<Outcome, CliError> {
    if k > 2 || degree > 20 {
        return Err(config("a-leqk: k at most 2, degree at most 20"));
    }
    let control = parse_control(mutate)?;
    if control == MapControl::DropQ0Term {
        return Err(config("a-leqk: drop-q0-term applies to a1-cotor only"));
    }
    let extend = extend.unwrap_or(degree + 8);
    let t = verify_a_leqk_vanishing(k, degree, extend, control).map_err(config)?;
    let h = Header::new("verify a-leqk", "a-to-bounded-a-vanishing", seed)
        .param("k", k)
        .param("degree", degree)
        .param("extend_to", t.extend_to)
        .param("mutate", control_name(control));
    Ok(report(&h, &table_body(&t), Verdict::from_bool(t.is_zero())))
}

pub struct CeParams<'a> {
    pub sub: &'a str,
    pub big: &'a str,
    pub coeffs: &'a str,
    pub s_max: u32,
    pub range: u32,
}

fn table_line(out: &mut String, name: &str, m: &BTreeMap<(u32, u32), usize>) {
    let cells: Vec<String> = m.iter().map(|(&(s, t), &d)| format!("({},{}):{}", s, t, d)).collect();
    let _ = writeln!(out, "{}: {}", name, cells.join(" "));
}

fn in_range(m: &BTreeMap<(u32, u32), usize>, s_max: u32, range: u32) -> BTreeMap<(u32, u32), usize> {
    m.iter()
        .filter(|(&(s, t), &d)| d > 0 && s <= s_max && t >= s && t - s <= range)
        .map(|(&k, &d)| (k, d))
        .collect()
}

pub fn cmd_verify_ce_abutment(p: &CeParams, seed: u64) -> Result<Outcome, CliError> {
    if p.s_max > 8 || p.range > 12 {
        return Err(config("ce-abutment: smax at most 8, range at most 12"));
    }
    let sub = parse_profile(p.sub)?;
    let big = parse_profile(p.big)?;
    if !big.is_finite() {
        return Err(config("ce-abutment: the big algebra must be finite"));
    }
    let t_max = p.s_max + p.range;
    let big_alg = algebra(&big, t_max)?;
    let m = parse_module(&big_alg, p.coeffs)?;
    let ss = ce_spectral_sequence(&sub, &big, &m, p.s_max, t_max).map_err(config)?;
    let h = Header::new("verify ce-abutment", "ce-spectral-sequence", seed)
        .param("sub", &ss.sub)
        .param("big", &ss.big)
        .param("coeffs", m.name())
        .param("s_max", p.s_max)
        .param("range", p.range);
    let mut body = String::new();
    let mut ok = true;
    let consistent = ss.pages_consistent();
    let _ = writeln!(body, "pages consistent: {}", consistent);
    ok &= consistent;
    for page in &ss.pages {
        let ranks: Vec<String> = page
            .differentials
            .iter()
            .map(|d| format!("({},{},{})->({},{},{}):{}", d.source.0, d.source.1, d.source.2, d.target.0, d.target.1, d.target.2, d.matrix.rank()))
            .collect();
        let _ = writeln!(body, "E{}: {} cells, d{} ranks [{}]", page.r, page.dims.len(), page.r, ranks.join(" "));
    }
    let abut = in_range(&ss.abutment(), p.s_max, p.range);
    let ext = in_range(&ext_for_abutment(&big, &m, p.s_max, t_max).map_err(config)?, p.s_max, p.range);
    table_line(&mut body, "abutment", &abut);
    table_line(&mut body, "ext (resolution)", &ext);
    let agree = abut == ext;
    let _ = writeln!(body, "abutment = ext: {}", agree);
    ok &= agree;
    if p.coeffs == "k" {
        // third oracle: Cotor over the dual of the big algebra
        let n = (0..=3).find(|&n| Profile::a(n) == big);
        if let Some(n) = n {
            let spec = DualSpec::a_dual(n as u8);
            let c = cobar_cotor(&spec, &ComoduleWindow::ground(spec.clone(), t_max), p.s_max, t_max).map_err(config)?;
            let cot = in_range(&c.dims(), p.s_max, p.range);
            table_line(&mut body, "cotor (cobar)", &cot);
            let a = cot == ext;
            let _ = writeln!(body, "cotor = ext: {}", a);
            ok &= a;
        }
        let einf = ss.e_infinity();
        let line0: BTreeMap<(u32, u32), usize> = einf
            .dims
            .iter()
            .filter(|(&(pp, q, _), _)| pp == 0 && q <= p.s_max)
            .map(|(&(_, q, t), &d)| ((q, t), d))
            .collect();
        let edge = ce_edge_ranks(&sub, &big, p.s_max, t_max).map_err(config)?;
        let a = edge == line0;
        let _ = writeln!(body, "edge map rank = E_inf^(0,*): {}", a);
        ok &= a;
        if sub == Profile::e(1) && big == Profile::a(1) {
            let e2 = ce_e2_by_cobar(p.s_max, t_max).map_err(config)?;
            let ours: BTreeMap<_, _> = ss.page(2).map(|pg| pg.dims.clone()).unwrap_or_default();
            let a = e2 == ours;
            let _ = writeln!(body, "E2 = cobar over the quotient with Ext_sub coefficients: {}", a);
            ok &= a;
        }
        if sub == big {
            let a = ss.page(2).map(|pg| &pg.dims) == Some(&ss.e_infinity().dims);
            let _ = writeln!(body, "degenerate pair, E2 = E_inf: {}", a);
            ok &= a;
        }
    }
    Ok(report(&h, &body, Verdict::from_bool(ok)))
}

pub fn cmd_verify_adams_e2(spec: &str, window: u32, seed: u64) -> Result<Outcome, CliError> {
    let s = AdamsSpec::parse(spec).ok_or_else(|| config(format!("unsupported spectrum {:?}; expected H, BP or A(1)*", spec)))?;
    if window > 16 {
        return Err(config("adams-e2: window at most 16"));
    }
    let r = adams_e2_vanishing_report(s, window).map_err(config)?;
    let h = Header::new("verify adams-e2", "adams-e2-vanishing", seed).param("spec", &r.spec).param("window", window);
    let mut body = String::from("check\tdegree_or_shift\tdim\n");
    for (what, d, n) in &r.rows {
        let _ = writeln!(body, "{}\t{}\t{}", what, d, n);
    }
    Ok(report(&h, &body, Verdict::from_bool(r.holds)))
}

pub fn cmd_cache(action: &str, cache: &Cache) -> Result<Outcome, CliError> {
    let text = match action {
        "path" => format!("{}\n", cache.dir().display()),
        "list" => {
            let mut s = String::new();
            for (name, size) in cache.list()? {
                let _ = writeln!(s, "{}\t{}", name, size);
            }
            s
        }
        "clear" => format!("removed {}\n", cache.clear()?),
        _ => return Err(config(format!("unknown cache action {:?}; expected path, list or clear", action))),
    };
    Ok(Outcome::plain(text))
}
