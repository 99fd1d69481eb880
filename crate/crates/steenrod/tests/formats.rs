use steenrod::cache::{ext_dims, Cache, Source};
use steenrod::comodule_json::{from_json, to_file, to_json, ComoduleJsonError, FORMAT_TAG};
use steenrod_core::cobar_ss::{cotor_comodule, CotorMutation};
use steenrod_core::comodule::{random_comodule, regular_comodule};
use steenrod_core::dual_hopf::{DualSpec, QTarget};
use steenrod_core::module_cat::{ext_dims_k, FinModule, FiniteAlgebra};

#[test]
fn cache_hits_and_recovers_from_damage() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::locate(Some(dir.path()));
    let alg = FiniteAlgebra::a(1);
    let k = FinModule::trivial(&alg, 0);
    let (r, src) = cache.resolution(&alg, &k, 4, 12).unwrap();
    assert_eq!(src, Source::Computed);
    assert_eq!(ext_dims(&r), ext_dims_k(&alg, &k, 4, 12));
    let (r2, src) = cache.resolution(&alg, &k, 4, 12).unwrap();
    assert_eq!(src, Source::Hit);
    assert_eq!(ext_dims(&r2), ext_dims(&r));

    // flip one differential bit: the entry fails validation and is replaced
    let (name, _) = cache.list().unwrap().pop().unwrap();
    let path = dir.path().join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    let i = text.find("\"d\":[\"").unwrap() + 6;
    let mut bytes = text.into_bytes();
    bytes[i] = if bytes[i] == b'0' { b'1' } else { b'0' };
    std::fs::write(&path, bytes).unwrap();
    let (r3, src) = cache.resolution(&alg, &k, 4, 12).unwrap();
    assert_eq!(src, Source::Replaced);
    assert_eq!(ext_dims(&r3), ext_dims(&r));

    std::fs::write(&path, "not json").unwrap();
    assert_eq!(cache.resolution(&alg, &k, 4, 12).unwrap().1, Source::Replaced);
    assert_eq!(cache.clear().unwrap(), 1);
    assert!(cache.list().unwrap().is_empty());
}

#[test]
fn cache_keys_separate_inputs() {
    let a1 = FiniteAlgebra::a(1);
    let e1 = FiniteAlgebra::e(1);
    let k1 = FinModule::trivial(&a1, 0);
    let ke = FinModule::trivial(&e1, 0);
    let base = Cache::key(&a1, &k1, 4, 12);
    assert_ne!(base, Cache::key(&e1, &ke, 4, 12));
    assert_ne!(base, Cache::key(&a1, &k1, 5, 12));
    assert_ne!(base, Cache::key(&a1, &k1, 4, 13));
    assert_eq!(base, Cache::key(&a1, &k1, 4, 12));
    assert_eq!(base.len(), 64);
}

#[test]
fn comodules_round_trip_through_json() {
    for seed in 0..10 {
        let m = random_comodule(seed, 12).comodule;
        let back = from_json(&to_json(&m).unwrap()).unwrap();
        assert_eq!(back, m, "seed {}", seed);
    }
    let c = cotor_comodule(2, QTarget::A1ModA2, 10, CotorMutation::None).unwrap();
    assert_eq!(from_json(&to_json(&c).unwrap()).unwrap(), c);
    let r = regular_comodule(&DualSpec::a_dual(1), 6);
    assert_eq!(from_json(&to_json(&r).unwrap()).unwrap(), r);
}

#[test]
fn invalid_comodule_files_are_rejected() {
    let m = random_comodule(1, 8).comodule;
    let good = to_file(&m).unwrap();

    let mut f = good.clone();
    f.format = "other".into();
    assert!(matches!(from_json(&serde_json::to_string(&f).unwrap()), Err(ComoduleJsonError::Format(_))));
    assert_eq!(good.format, FORMAT_TAG);

    let mut f = good.clone();
    f.coaction.pop();
    assert!(matches!(from_json(&serde_json::to_string(&f).unwrap()), Err(ComoduleJsonError::Rows { .. })));

    // drop the counit term of the top element: no longer a comodule
    let mut f = good.clone();
    let last = f.coaction.len() - 1;
    f.coaction[last].retain(|t| !t.zeta.is_empty());
    assert!(matches!(from_json(&serde_json::to_string(&f).unwrap()), Err(ComoduleJsonError::Invalid(_))));

    let mut f = good;
    f.side = "middle".into();
    assert!(matches!(from_json(&serde_json::to_string(&f).unwrap()), Err(ComoduleJsonError::Side(_))));
}

#[test]
fn cotor_chart_reads_comodule_files() {
    use steenrod::chart::Format;
    use steenrod::commands::cmd_chart_cotor;
    let dir = tempfile::tempdir().unwrap();
    let spec = DualSpec::a_dual(1);
    let path = dir.path().join("k.json");
    std::fs::write(&path, to_json(&steenrod_core::comodule::ComoduleWindow::ground(spec, 12)).unwrap()).unwrap();
    let from_file = cmd_chart_cotor("A[1]*", &format!("file:{}", path.display()), 3, 12, Format::Tsv, 0).unwrap();
    let direct = cmd_chart_cotor("A[1]*", "k", 3, 12, Format::Tsv, 0).unwrap();
    let body = |s: &str| s.lines().filter(|l| !l.starts_with('#')).map(String::from).collect::<Vec<_>>();
    assert_eq!(body(&from_file.text), body(&direct.text));
    assert!(cmd_chart_cotor("A[2]*", &format!("file:{}", path.display()), 3, 12, Format::Tsv, 0).is_err());
}
