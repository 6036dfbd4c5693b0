//! Generalised quotients and coideal subalgebras of a group algebra are in
//! bijection with subgroups.

use std::collections::BTreeSet;

use hopf_galois::exactla::enumerate::DEFAULT_CAP;
use hopf_galois::exactla::{FieldSpec, Subspace};
use hopf_galois::hopf::{cyclic_group, group_algebra, symmetric_group};
use hopf_galois::quotlat::{enumerate_coideal_subalgebras, enumerate_ricos};

fn subgroups(table: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    let n = table.len();
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<BTreeSet<_>>())
        .filter(|s| s.contains(&0) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&table[a][b]))))
        .collect()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

/// `span{h·g − g : h ∈ K, g ∈ G}`.
fn ideal_of(table: &[Vec<usize>], k: &BTreeSet<usize>, f: FieldSpec) -> Subspace {
    let n = table.len();
    let mut rows = Vec::new();
    for &h in k {
        for g in 0..n {
            let mut v = unit(n, table[h][g]);
            v[g] -= 1;
            rows.push(v);
        }
    }
    Subspace::span_i64(f, n, &rows)
}

fn group_span(n: usize, k: &BTreeSet<usize>, f: FieldSpec) -> Subspace {
    let rows: Vec<Vec<i64>> = k.iter().map(|&g| unit(n, g)).collect();
    Subspace::span_i64(f, n, &rows)
}

fn check(table: &[Vec<usize>], f: FieldSpec) {
    let n = table.len();
    let h = group_algebra(table, f).unwrap();
    let subs = subgroups(table);
    let mut expected_ideals: Vec<Subspace> = subs.iter().map(|k| ideal_of(table, k, f)).collect();
    expected_ideals.sort();
    let mut found: Vec<Subspace> = enumerate_ricos(&h, DEFAULT_CAP)
        .unwrap()
        .into_elements()
        .into_iter()
        .map(|q| q.ideal().clone())
        .collect();
    found.sort();
    assert_eq!(found, expected_ideals, "ricos of {f}[G], |G| = {n}");

    let mut expected_subalgebras: Vec<Subspace> = subs.iter().map(|k| group_span(n, k, f)).collect();
    expected_subalgebras.sort();
    let found: Vec<Subspace> = enumerate_coideal_subalgebras(&h, DEFAULT_CAP)
        .unwrap()
        .into_elements()
        .into_iter()
        .map(|k| k.into_space())
        .collect();
    assert_eq!(found, expected_subalgebras, "coideal subalgebras of {f}[G], |G| = {n}");
}

#[test]
fn cyclic_groups() {
    for n in 1..=4 {
        for p in [2, 3] {
            check(&cyclic_group(n), FieldSpec::Prime(p));
        }
    }
}

#[test]
fn klein_four() {
    let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    check(&table, FieldSpec::Prime(3));
}

#[test]
fn symmetric_three() {
    let (t, _) = symmetric_group(3);
    check(&t, FieldSpec::Prime(2));
}
