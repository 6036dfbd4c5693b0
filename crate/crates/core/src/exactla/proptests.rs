use proptest::prelude::*;

use super::*;

const GF3: FieldSpec = FieldSpec::Prime(3);

fn gf3_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0i64..3, rows * cols).prop_map(move |v| {
        let rows_v: Vec<Vec<i64>> = v.chunks(cols).map(<[i64]>::to_vec).collect();
        Matrix::from_i64(GF3, &rows_v)
    })
}

fn gf3_subspace(n: usize) -> impl Strategy<Value = Subspace> {
    (0usize..=n).prop_flat_map(move |k| {
        gf3_matrix(k, n).prop_map(move |m| {
            if k == 0 {
                Subspace::zero(GF3, n)
            } else {
                Subspace::from_matrix_rows(&m)
            }
        })
    })
}

/// Intersection through kernels: `V ∩ W = {v : π_V v = 0, π_W v = 0}`.
fn intersect_by_kernels(v: &Subspace, w: &Subspace) -> Subspace {
    let pv = v.quotient_data().proj;
    let pw = w.quotient_data().proj;
    pv.vstack(&pw).kernel()
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in gf3_matrix(3, 4)) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
    }

    #[test]
    fn rank_nullity(m in gf3_matrix(3, 5)) {
        prop_assert_eq!(m.kernel().dim() + m.rank(), m.cols());
        let k = m.kernel();
        if !k.is_zero() {
            prop_assert!(m.mul(&k.basis_columns()).is_zero());
        }
    }

    #[test]
    fn modular_dimension_law(v in gf3_subspace(4), w in gf3_subspace(4)) {
        let sum = v.sum(&w).unwrap();
        let meet = v.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), v.dim() + w.dim());
        // the stacked-basis rank oracle for the sum
        prop_assert_eq!(sum.dim(), v.basis().vstack(w.basis()).rank());
        // Zassenhaus and the kernel route agree exactly
        prop_assert_eq!(meet.clone(), intersect_by_kernels(&v, &w));
        prop_assert!(meet.le(&v).unwrap() && meet.le(&w).unwrap());
        prop_assert!(v.le(&sum).unwrap() && w.le(&sum).unwrap());
    }

    #[test]
    fn kron_evaluates_factorwise(
        m in gf3_matrix(2, 3),
        n in gf3_matrix(3, 2),
        u in gf3_matrix(3, 1),
        v in gf3_matrix(2, 1),
    ) {
        let lhs = m.kron(&n).mul(&u.kron(&v));
        // direct evaluation: entry (i·3+k) of Mu ⊗ Nv is (Mu)_i (Nv)_k
        let mu = m.mul(&u);
        let nv = n.mul(&v);
        for i in 0..2 {
            for k in 0..3 {
                let expected = mu.get(i, 0).mul(&nv.get(k, 0)).unwrap();
                prop_assert_eq!(lhs.get(i * 3 + k, 0), expected);
            }
        }
    }

    #[test]
    fn quotient_data_invariants(v in gf3_subspace(4)) {
        let q = v.quotient_data();
        prop_assert_eq!(q.proj.mul(&q.section), Matrix::identity(GF3, 4 - v.dim()));
        prop_assert_eq!(q.proj.kernel(), v);
    }

    #[test]
    fn canonical_form_ignores_spanning_set(m in gf3_matrix(3, 4), mix in gf3_matrix(3, 3)) {
        // rows of mix·m span a subspace of rowspace(m); equal when mix is invertible
        let a = Subspace::from_matrix_rows(&m);
        let b = Subspace::from_matrix_rows(&mix.mul(&m));
        prop_assert!(b.le(&a).unwrap());
        if mix.inverse().is_some() {
            prop_assert_eq!(a, b);
        }
    }
}
