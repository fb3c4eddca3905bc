use proptest::prelude::*;
use qls_core::numerics::{block_diag, fourier_matrix, inner, is_unitary, phased_fourier, tensor};
use qls_core::{Complex, StateVector, Tolerance, UnitaryMatrix};

fn unit_vector(dim: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim)
        .prop_filter("nonzero", |v| v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3))
        .prop_map(|v| StateVector::normalized(v.into_iter().map(|(a, b)| Complex::new(a, b)).collect()).unwrap())
}

#[test]
fn fourier_unitary_up_to_32() {
    let tol = Tolerance::default();
    for v in 1..=32 {
        assert!(is_unitary(fourier_matrix(v).matrix(), &tol).unitary, "v = {v}");
        for k in 0..100 {
            let th = 2.0 * std::f64::consts::PI * k as f64 / 100.0;
            assert!(is_unitary(phased_fourier(v, th).matrix(), &tol).unitary);
        }
    }
}

#[test]
fn fourier_columns_orthogonal_up_to_64() {
    for v in 2..=64 {
        let f = fourier_matrix(v);
        let cols = f.columns();
        for a in 0..v {
            for b in a + 1..v {
                assert!(inner(&cols[a], &cols[b]).unwrap().norm() <= 1e-10, "v = {v}");
            }
        }
    }
}

proptest! {
    #[test]
    fn inner_is_hermitian(u in unit_vector(5), w in unit_vector(5)) {
        let a = inner(&u, &w).unwrap();
        let b = inner(&w, &u).unwrap();
        prop_assert!((a - b.conj()).norm() <= 1e-12);
    }

    #[test]
    fn tensor_keeps_unit_norm(u in unit_vector(3), w in unit_vector(4)) {
        prop_assert!((tensor(&u, &w).norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn block_diag_keeps_unitarity(sizes in prop::collection::vec(1usize..5, 1..4), th in 0.0f64..3.0) {
        let blocks: Vec<UnitaryMatrix> = sizes.iter().map(|&d| phased_fourier(d, th)).collect();
        let m = block_diag(&blocks).unwrap();
        prop_assert_eq!(m.dim(), sizes.iter().sum::<usize>());
        prop_assert!(is_unitary(m.matrix(), &Tolerance::default()).unitary);
    }
}
