use sqfd_core::family::build_family;
use sqfd_core::search::{canonical_form, read_findings_log, scan, ScanOptions, SearchConfig};
use sqfd_core::Ideal;

fn config() -> SearchConfig {
    SearchConfig {
        ambient_n: 7,
        gen_degree: (2, 3),
        density: 0.12,
        seed: 2024,
        sample_count: 400,
        primes: vec![2, 3],
        ..Default::default()
    }
}

#[test]
fn scans_are_identical_across_worker_counts() {
    let cfg = config();
    let one = scan(
        &cfg,
        &ScanOptions {
            workers: Some(1),
            log: None,
        },
    )
    .unwrap();
    let four = scan(
        &cfg,
        &ScanOptions {
            workers: Some(4),
            log: None,
        },
    )
    .unwrap();
    assert_eq!(one, four);
    assert_eq!(one.summary.positions, 400);
    assert_eq!(one.summary.evaluated + one.summary.degenerate, 800);
}

#[test]
fn persisted_findings_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("findings.jsonl");
    let injected: Vec<Ideal> = (8..=12)
        .map(|n| {
            // pad the family into the scan's ring
            build_family(n).unwrap().with_ambient(12).unwrap()
        })
        .collect();
    let cfg = SearchConfig {
        ambient_n: 12,
        gen_degree: (3, 3),
        density: 0.01,
        sample_count: 20,
        primes: vec![2],
        injected,
        ..config()
    };
    let out = scan(
        &cfg,
        &ScanOptions {
            workers: None,
            log: Some(log.clone()),
        },
    )
    .unwrap();
    let persisted = read_findings_log(&log).unwrap();
    assert_eq!(persisted, out.findings);
    for n in 8..=12 {
        let index = 20 + (n - 8) as u64;
        let hit = persisted
            .iter()
            .find(|f| f.index == index)
            .expect("family flagged");
        assert_eq!(hit.violations, vec![1]);
        // each padding variable raises every g(k) by one
        let pad = 12 - n as i64;
        assert_eq!(hit.profile.values(), vec![1 + pad, n as i64 - 6 + pad]);
    }
    for f in &persisted {
        assert!(f.reverify().unwrap());
    }
    assert!(!out.summary.dedup);
}

#[test]
fn exhaustive_edge_ideals_on_six_vertices_never_increase() {
    let cfg = SearchConfig {
        ambient_n: 6,
        edge_ideals_only: true,
        exhaustive: true,
        primes: vec![2],
        ..config()
    };
    let out = scan(&cfg, &ScanOptions::default()).unwrap();
    assert_eq!(out.summary.evaluated, (1 << 15) - 1);
    assert!(out.findings.is_empty());
    assert!(out.summary.max_increase.unwrap() <= 0);
}

#[test]
fn canonical_forms_identify_relabelings_at_eight() {
    use rand::{seq::SliceRandom, SeedableRng};
    let fam = build_family(8).unwrap();
    let base = canonical_form(&fam).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let mut perm: Vec<usize> = (1..=8).collect();
        perm.shuffle(&mut rng);
        assert_eq!(canonical_form(&fam.permute(&perm).unwrap()).unwrap(), base);
    }
    let other = build_family(7).unwrap().with_ambient(8).unwrap();
    assert_ne!(canonical_form(&other).unwrap(), base);
}
