use hopf_galois::exactla::enumerate::DEFAULT_CAP;
use hopf_galois::exactla::{FieldSpec, Subspace};
use hopf_galois::hopf::{cyclic_group, group_algebra, sweedler, HopfAlgebraData};
use hopf_galois::quotlat::{
    crosscheck_quotient_lattice, enumerate_ricos, join_q, meet_q, poset_report, GeneralisedQuotient,
};

const GF3: FieldSpec = FieldSpec::Prime(3);

struct Lattice {
    h: HopfAlgebraData,
    q: Vec<GeneralisedQuotient>,
}

impl Lattice {
    fn new(h: HopfAlgebraData) -> Self {
        let q = enumerate_ricos(&h, DEFAULT_CAP).unwrap().into_elements();
        Lattice { h, q }
    }

    fn index(&self, q: &GeneralisedQuotient) -> usize {
        self.q.iter().position(|e| e.ideal() == q.ideal()).expect("closed under the operation")
    }

    fn join(&self, i: usize, j: usize) -> usize {
        self.index(&join_q(&self.h, &self.q[i], &self.q[j]).unwrap())
    }

    fn meet(&self, i: usize, j: usize) -> usize {
        self.index(&meet_q(&self.h, &self.q[i], &self.q[j]).unwrap())
    }
}

fn laws(l: &Lattice) {
    let n = l.q.len();
    for i in 0..n {
        assert_eq!(l.join(i, i), i);
        assert_eq!(l.meet(i, i), i);
        for j in 0..n {
            assert_eq!(l.join(i, j), l.join(j, i));
            assert_eq!(l.meet(i, j), l.meet(j, i));
            assert_eq!(l.join(i, l.meet(i, j)), i);
            assert_eq!(l.meet(i, l.join(i, j)), i);
            for k in 0..n {
                assert_eq!(l.join(l.join(i, j), k), l.join(i, l.join(j, k)));
                assert_eq!(l.meet(l.meet(i, j), k), l.meet(i, l.meet(j, k)));
            }
        }
    }
}

/// The largest enumerated ideal inside `I_i ∩ I_j`.
fn oracle_meet(l: &Lattice, i: usize, j: usize) -> usize {
    let cap = l.q[i].ideal().intersect(l.q[j].ideal()).unwrap();
    let inside: Vec<usize> = (0..l.q.len()).filter(|&k| l.q[k].ideal().le(&cap).unwrap()).collect();
    let top = *inside.iter().max_by_key(|&&k| l.q[k].ideal().dim()).unwrap();
    for &k in &inside {
        assert!(l.q[k].ideal().le(l.q[top].ideal()).unwrap(), "no largest rico inside the intersection");
    }
    top
}

#[test]
fn sweedler_lattice_laws() {
    laws(&Lattice::new(sweedler(GF3).unwrap()));
}

#[test]
fn c2_lattice_laws() {
    laws(&Lattice::new(group_algebra(&cyclic_group(2), GF3).unwrap()));
}

#[test]
fn meet_matches_enumeration_oracle() {
    for h in [sweedler(GF3).unwrap(), group_algebra(&cyclic_group(3), FieldSpec::Prime(2)).unwrap()] {
        let l = Lattice::new(h);
        for i in 0..l.q.len() {
            for j in 0..l.q.len() {
                assert_eq!(l.meet(i, j), oracle_meet(&l, i, j));
            }
        }
    }
}

#[test]
fn operations_agree_with_order_table() {
    let h = sweedler(GF3).unwrap();
    let p = enumerate_ricos(&h, DEFAULT_CAP).unwrap();
    let r = poset_report(&p).unwrap();
    assert!(r.is_lattice);
    crosscheck_quotient_lattice(&h, &p, &r).unwrap();
}

#[test]
fn sum_of_ideals_is_the_ideal_sum() {
    let l = Lattice::new(sweedler(GF3).unwrap());
    for i in 0..l.q.len() {
        for j in 0..l.q.len() {
            let sum: Subspace = l.q[i].ideal().sum(l.q[j].ideal()).unwrap();
            assert_eq!(l.q[l.join(i, j)].ideal(), &sum);
        }
    }
}
