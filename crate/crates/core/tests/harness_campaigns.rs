//! Campaign-level checks: clean sweeps over the classical pseudoprime
//! families, CRT-vs-brute-force agreement, and reproducible reports.

use std::io::Write as _;

use cubic_primality::harness::campaigns::{
    scan_all_k, scan_list_file, scan_odd_range, scan_power_of_two_a, scan_random,
    semiprime_k_search, ListPolicy, OddRangePolicy, ScanOptions,
};
use cubic_primality::harness::lists::{carmichael_numbers, fermat_base2_pseudoprimes};
use cubic_primality::harness::smallring::{brute_force_k_sweep, canonical_k};
use cubic_primality::intmath::{is_prime_u64, mult_order_of_two};

fn opts() -> ScanOptions {
    ScanOptions { threads: 2 }
}

#[test]
fn all_k_sweep_to_1e4_is_clean() {
    let c = scan_all_k(10_000, &opts());
    assert!(c.is_clean(), "{:?}", c.counterexamples);
    let psps = fermat_base2_pseudoprimes(10_001);
    assert_eq!(psps.len(), 22);
    assert_eq!(c.stats.tested, psps.iter().map(|n| n / 2).sum::<u64>());
}

#[test]
fn power_of_two_parameters_to_1e4_are_clean() {
    let c = scan_power_of_two_a(10_000, &opts());
    assert!(c.is_clean(), "{:?}", c.counterexamples);
    assert!(c.stats.tested > 0);
    // one row per (n, r) with r up to ord_n(2)
    let rows: u64 = fermat_base2_pseudoprimes(10_001)
        .iter()
        .map(|&n| mult_order_of_two(n))
        .sum();
    assert_eq!(c.stats.tested + c.stats.skipped, rows);
}

#[test]
fn carmichael_numbers_survive_a_k_range_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("carmichael.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    let carmichaels = carmichael_numbers(1_000_000);
    assert_eq!(carmichaels.len(), 43);
    writeln!(f, "# carmichael numbers below 1e6").unwrap();
    for n in &carmichaels {
        writeln!(f, "{n}").unwrap();
    }
    drop(f);
    let c = scan_list_file(&path, ListPolicy::KRange { k_max: 50 }, &opts()).unwrap();
    assert!(c.is_clean(), "{:?}", c.counterexamples);
    assert_eq!(c.stats.tested, 43);
    assert_eq!(c.stats.skipped, 0);
}

#[test]
fn fermat_pseudoprimes_survive_a_first_b_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psp2.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    for n in fermat_base2_pseudoprimes(10_000) {
        writeln!(f, "{n}").unwrap();
    }
    drop(f);
    let c = scan_list_file(&path, ListPolicy::FirstMB { m: 20 }, &opts()).unwrap();
    assert!(c.is_clean(), "{:?}", c.counterexamples);
    assert_eq!(c.stats.tested, 22);
}

#[test]
fn odd_range_first_b_sweep_is_clean() {
    let c = scan_odd_range(4_000, OddRangePolicy::FirstMB { m: 20 }, &opts());
    assert!(c.is_clean(), "{:?}", c.counterexamples);
}

#[test]
fn crt_search_equals_brute_force_below_3000() {
    let mut pairs = 0u32;
    for p in (3u64..55).step_by(2) {
        if !is_prime_u64(p) {
            continue;
        }
        for q in (p + 2..3_000 / p).step_by(2) {
            if !is_prime_u64(q) {
                continue;
            }
            let n = p * q;
            let found = semiprime_k_search(p, q).unwrap();
            let mut via_crt: Vec<u64> =
                found.ks.iter().map(|&k| canonical_k(k, n)).collect();
            via_crt.sort_unstable();
            via_crt.dedup();
            assert_eq!(via_crt, brute_force_k_sweep(n), "n = {p} * {q}");
            pairs += 1;
        }
    }
    assert!(pairs > 200, "only {pairs} pairs covered");
}

#[test]
fn random_sweep_is_clean_and_thread_invariant() {
    let a = scan_random(2_000, None, &opts());
    assert!(a.is_clean(), "{:?}", a.counterexamples);
    assert_eq!(a.stats.tested + a.stats.skipped, 2_000);
    assert_eq!(a.params["seed"], "0x1234567812345678");
    let b = scan_random(2_000, None, &ScanOptions { threads: 5 });
    assert_eq!(a.to_json(), b.to_json());
}
