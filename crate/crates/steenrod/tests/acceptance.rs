//! One PASS/FAIL line per acceptance criterion. Runs as a plain binary
//! (`harness = false`) so the lines are printed without `--nocapture`.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use steenrod_core::cobar_ss::{
    a1_cotor_extension, cobar_coaction_on_q, cobar_cotor, cotor_comodule_iso, verify_a1_to_cotor_vanishing, MapControl,
};
use steenrod_core::comodule::{
    check_unipotent_filtration, extendable_map_space, is_unipotent, random_comodule, regular_comodule, ComoduleWindow,
};
use steenrod_core::dual_hopf::{
    adjoint_coaction, adjoint_coaction_diagram, coaction_on_q, dual_axioms, duality_check, steenrod_axioms,
    DualMonomial, DualSpec, QTarget,
};
use steenrod_core::milnor::{basis_in_degree, milnor_product, pd_degree, MilnorElement, Profile};
use steenrod_core::module_cat::{
    double_module, ext_dims_k, hom_to_free_vanishing, moore_module, random_finite_module, FinModule, FiniteAlgebra,
};
use steenrod_oracles::{adem_product, admissible_basis, partition_counts, poincare_series_a, q_monomial_count};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hopf_axioms() -> Check {
    let t = Instant::now();
    let mut checks = steenrod_axioms(24);
    checks.extend(dual_axioms(24));
    let cases: usize = checks.iter().map(|c| c.cases).sum();
    for c in &checks {
        ensure(c.holds(), || format!("{} fails: {:?}", c.name, c.failures.first()))?;
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(secs <= 60.0, || format!("took {:.1}s", secs))?;
    Ok(format!("{} checks, {} cases through degree 24, {:.1}s", checks.len(), cases, secs))
}

fn duality() -> Check {
    let c = duality_check(16);
    ensure(c.holds(), || format!("{:?}", c.failures.first()))?;
    Ok(format!("{} structure constants through degree 16", c.cases))
}

fn dimension_oracles() -> Check {
    let p = partition_counts(24);
    for d in 0..=24u32 {
        let got = basis_in_degree(&Profile::full(), d).len() as u64;
        ensure(got == p[d as usize], || format!("dim A^{} = {}, expected {}", d, got, p[d as usize]))?;
    }
    let a1: usize = (0..=6).map(|d| basis_in_degree(&Profile::a(1), d).len()).sum();
    ensure(a1 == 8 && pd_degree(1) == 6, || format!("dim A(1) = {}, pd = {}", a1, pd_degree(1)))?;
    let pd2 = pd_degree(2);
    ensure(pd2 == 23, || format!("pd(2) = {}", pd2))?;
    let v: Vec<i64> = (0..=pd2).map(|d| basis_in_degree(&Profile::a(2), d).len() as i64).collect();
    ensure(v.iter().eq(v.iter().rev()), || "A(2) dimensions not palindromic".into())?;
    ensure(v == poincare_series_a(2, pd2 as usize), || "A(2) dimensions differ from product formula".into())?;
    Ok(format!("A through 24, dim A(1) = 8, A(2) total {}", v.iter().sum::<i64>()))
}

fn to_milnor(s: &[u32]) -> MilnorElement {
    s.iter().fold(MilnorElement::one(), |acc, &a| milnor_product(&acc, &MilnorElement::sq(&[a])))
}

fn adem_agreement() -> Check {
    let mut pairs = 0;
    for d1 in 0..=12u32 {
        for d2 in 0..=12 - d1 {
            for x in admissible_basis(d1) {
                for y in admissible_basis(d2) {
                    let direct = milnor_product(&to_milnor(&x), &to_milnor(&y));
                    let mut via = MilnorElement::zero(d1 + d2);
                    for s in adem_product(&[x.clone()].into(), &[y.clone()].into()) {
                        via = via.add(&to_milnor(&s));
                    }
                    ensure(direct == via, || format!("Sq{:?} * Sq{:?}", x, y))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{} basis pairs", pairs))
}

fn palg_certificates() -> Check {
    let window = FiniteAlgebra::truncated(&Profile::full(), 24);
    let mut modules = vec![FinModule::trivial(&window, 0), moore_module(&window)];
    modules.extend((1..=3).map(|seed| random_finite_module(&window, seed, 8)));
    let mut names = Vec::new();
    for m in &modules {
        ensure(m.dim() <= 8, || format!("{} has dimension {}", m.name(), m.dim()))?;
        for w in [1, 2] {
            let cert = hom_to_free_vanishing(m, &window, w, &[0]).map_err(|e| e.to_string())?;
            ensure(cert.holds, || format!("{} with witness A({}) fails", m.name(), w))?;
        }
        names.push(m.name().to_string());
    }
    let degenerate = window.degenerate_from(4);
    let k = FinModule::trivial(&degenerate, 0);
    let control = hom_to_free_vanishing(&k, &degenerate, 2, &[0]).map_err(|e| e.to_string())?;
    ensure(!control.holds, || "degenerated pairing still certifies".into())?;
    Ok(format!("{} certified with A(1) and A(2); degenerate control rejected", names.join(", ")))
}

fn cotor_ring() -> Check {
    let t = Instant::now();
    let spec = DualSpec::exterior();
    let c = cobar_cotor(&spec, &ComoduleWindow::ground(spec.clone(), 20), 4, 20).map_err(|e| e.to_string())?;
    let dims = c.dims();
    let mut classes = 0;
    for s in 0..=4 {
        for t in 0..=20 {
            let got = dims.get(&(s, t)).copied().unwrap_or(0) as u64;
            let want = q_monomial_count(s, t);
            ensure(got == want, || format!("Cotor^({},{}) = {}, expected {}", s, t, got, want))?;
            classes += got;
        }
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(secs <= 300.0, || format!("took {:.1}s", secs))?;
    Ok(format!("{} classes for s <= 4, t <= 20, {:.2}s", classes, secs))
}

fn coaction_formulas() -> Check {
    for target in [QTarget::A1, QTarget::A1ModA2, QTarget::A1ModA3] {
        for n in 0..=3 {
            let from_cobar = cobar_coaction_on_q(n, target).map_err(|e| e.to_string())?;
            ensure(from_cobar == coaction_on_q(n, target), || format!("q{} over {:?}", n, target))?;
        }
    }
    for n in 1..=4 {
        let z = DualMonomial::zeta(n);
        ensure(adjoint_coaction(&z) == adjoint_coaction_diagram(&z), || format!("adjoint coaction on z{}", n))?;
    }
    Ok("q0..q3 over three targets; adjoint coaction on z1..z4".into())
}

fn cotor_iso() -> Check {
    for k in 0..=2 {
        let r = cotor_comodule_iso(k, 14).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("k = {}: {:?}", k, r))?;
    }
    Ok("k = 0, 1, 2 through degree 14, map and inverse both comodule maps".into())
}

fn exit_code(args: &[&str]) -> Result<i32, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_steenrod")).args(args).output().map_err(|e| e.to_string())?;
    out.status.code().ok_or_else(|| "killed by signal".into())
}

fn a1_cotor() -> Check {
    let w = 14;
    for k in 1..=2 {
        let t = verify_a1_to_cotor_vanishing(k, w, a1_cotor_extension(w), MapControl::None).map_err(|e| e.to_string())?;
        ensure(t.is_zero(), || format!("k = {}: nonzero at shifts {:?}", k, t.nonzero().map(|r| r.shift).collect::<Vec<_>>()))?;
    }
    let control = verify_a1_to_cotor_vanishing(2, w, a1_cotor_extension(w), MapControl::TrivializeSource)
        .map_err(|e| e.to_string())?;
    let hits = control.nonzero().count();
    ensure(hits > 0, || "mutated control gives zero".into())?;
    let ok = exit_code(&["verify", "a1-cotor", "--k", "2", "--degree", "14"])?;
    let bad = exit_code(&["verify", "a1-cotor", "--k", "2", "--degree", "14", "--mutate", "trivialize-source"])?;
    let misconfigured = exit_code(&["verify", "a1-cotor", "--k", "9"])?;
    ensure((ok, bad, misconfigured) == (0, 1, 2), || format!("exit codes {} {} {}", ok, bad, misconfigured))?;
    Ok(format!("k = 1, 2, shifts -14..=14 zero; control nonzero in {} shifts; exit codes 0/1/2", hits))
}

fn ce_two_oracles() -> Check {
    // A(0) is not normal in A(1); E(1) is, with quotient exterior on Sq(2)
    let out = Command::new(env!("CARGO_BIN_EXE_steenrod"))
        .args(["verify", "ce-abutment", "--sub", "E(1)", "--big", "A(1)", "--smax", "6", "--range", "8"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || {
        text.lines().filter(|l| l.contains("false")).collect::<Vec<_>>().join("; ")
    })?;
    let sq2sq1 = milnor_product(&MilnorElement::sq(&[2]), &MilnorElement::sq(&[1]));
    let sq1sq2 = milnor_product(&MilnorElement::sq(&[1]), &MilnorElement::sq(&[2]));
    ensure(sq2sq1 != sq1sq2, || "A(0) unexpectedly normal".into())?;
    Ok("E(1) < A(1), t - s <= 8, s <= 6: E_inf = Ext = Cotor, E2 and edge checked".into())
}

fn doubling() -> Check {
    let alg = FiniteAlgebra::a(1);
    let k = FinModule::trivial(&alg, 0);
    let (dk, dalg) = double_module(&k, &alg, 1);
    let (s_max, range) = (6u32, 8u32);
    let ext = ext_dims_k(&alg, &k, s_max, s_max + range);
    let dext = ext_dims_k(&dalg, &dk, s_max, 2 * (s_max + range));
    let mut cells = 0;
    for s in 0..=s_max {
        for t in s..=s + range {
            let a = ext.get(&(s, t)).copied().unwrap_or(0);
            let b = dext.get(&(s, 2 * t)).copied().unwrap_or(0);
            ensure(a == b, || format!("({}, {}): {} vs {}", s, t, a, b))?;
            ensure(dext.get(&(s, 2 * t + 1)).copied().unwrap_or(0) == 0, || format!("odd class at ({}, {})", s, 2 * t + 1))?;
            cells += a;
        }
    }
    Ok(format!("{} classes of Ext over A(1) match its double under (s, t) -> (s, 2t)", cells))
}

fn unipotence() -> Check {
    let src = regular_comodule(&DualSpec::full(), 24);
    for seed in 0..200u64 {
        let r = random_comodule(seed, 12);
        let m = &r.comodule;
        ensure(m.dim() <= 12, || format!("seed {} has dimension {}", seed, m.dim()))?;
        let f = is_unipotent(m).ok_or_else(|| format!("seed {} not unipotent", seed))?;
        ensure(check_unipotent_filtration(m, &r.filtration), || format!("seed {} filtration", seed))?;
        ensure(f.len() <= r.filtration.len(), || format!("seed {}: primitive sequence longer", seed))?;
        let (sub, _) = m.subcomodule(&r.sub).map_err(|e| e.to_string())?;
        let (quot, _) = m.quotient(&r.sub).map_err(|e| e.to_string())?;
        // both directions, with lengths: sub and quotient are no longer than M,
        // and M is no longer than the two pieces stacked
        let ls = is_unipotent(&sub).ok_or_else(|| format!("seed {}: sub not unipotent", seed))?.len();
        let lq = is_unipotent(&quot).ok_or_else(|| format!("seed {}: quotient not unipotent", seed))?.len();
        ensure(ls <= f.len() && lq <= f.len() && f.len() <= ls + lq, || {
            format!("seed {}: lengths {} (sub) {} (quotient) {} (whole)", seed, ls, lq, f.len())
        })?;
        for shift in -8..=8 {
            let rep = extendable_map_space(&src, m, shift, 8, 24);
            ensure(rep.dim == 0, || format!("seed {}: maps from A_* in shift {}", seed, shift))?;
        }
    }
    Ok("200 samples: primitive sequence length, two-out-of-three, Hom(A_*, M) = 0 in window".into())
}

fn reproducibility() -> Check {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cache = tempfile::tempdir().map_err(|e| e.to_string())?;
    let runs: &[(&str, &[&str])] = &[
        ("ext_a1.tsv", &["chart", "ext", "--algebra", "A(1)", "--smax", "6", "--range", "8"]),
        ("ext_a1.json", &["chart", "ext", "--algebra", "A(1)", "--smax", "6", "--range", "8", "--format", "json"]),
        ("ext_a1.svg", &["chart", "ext", "--algebra", "A(1)", "--smax", "6", "--range", "8", "--format", "svg"]),
        (
            "ext_a1_random3.tsv",
            &["chart", "ext", "--algebra", "A(1)", "--coeffs", "random:3", "--smax", "4", "--range", "6", "--seed", "3"],
        ),
        ("ce_e2.json", &["chart", "ss-page", "--page", "2", "--format", "json"]),
    ];
    for (name, args) in runs {
        let mut outs = Vec::new();
        for _ in 0..2 {
            let o = Command::new(env!("CARGO_BIN_EXE_steenrod"))
                .args(*args)
                .arg("--cache-dir")
                .arg(cache.path())
                .output()
                .map_err(|e| e.to_string())?;
            outs.push(o.stdout);
        }
        ensure(outs[0] == outs[1], || format!("{} differs between runs", name))?;
        let want = std::fs::read(golden.join(name)).map_err(|e| e.to_string())?;
        ensure(outs[0] == want, || format!("{} differs from golden file", name))?;
    }
    Ok(format!("{} outputs byte-identical across runs and to golden files", runs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 13] = [
        ("Hopf axioms for A and A_* through degree 24", hopf_axioms),
        ("dual coproduct is the transpose of the Milnor product", duality),
        ("dimension oracles", dimension_oracles),
        ("Milnor product agrees with Adem reduction", adem_agreement),
        ("no maps from finite modules into free modules", palg_certificates),
        ("Cotor over the exterior quotient is F2[q_n]", cotor_ring),
        ("coaction on q_n and the adjoint coaction", coaction_formulas),
        ("Cotor^k comodule isomorphism", cotor_iso),
        ("no maps from A(1)_* into Cotor^k", a1_cotor),
        ("Cartan-Eilenberg abutment against two oracles", ce_two_oracles),
        ("doubling scales Ext charts", doubling),
        ("unipotent comodules", unipotence),
        ("reproducible chart output", reproducibility),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS {:>2} {}: {} [{:.2}s]", i + 1, name, detail, secs),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {}: {} [{:.2}s]", i + 1, name, why, secs);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
