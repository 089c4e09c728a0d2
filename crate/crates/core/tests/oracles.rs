mod common;

use common::*;
use num_traits::{One, Zero};
use triad::families::{family_value, Family};
use triad::konvalina::{c_oracle, c_table, c_value, s_oracle, s_table, s_value, sbar, sbar_table, WeightVector};
use triad::operators::{n_qhat, qhat};
use triad::psi_ext::{psi_stirling1, psi_stirling2};
use triad::triad::{triad_coefficients, triad_polynomials, verify_connection, Sequence};
use triad::{Poly, PsiSequence, Rational, Scalar, TriadSpec};

#[test]
fn oracles_agree_with_each_other() {
    let w = vec![int(2), s("q"), int(-3), s("1/(1+q)")];
    for k in 0..=5 {
        assert_eq!(elementary(&w, k), newton_elementary(&w, k));
        assert_eq!(homogeneous(&w, k), newton_homogeneous(&w, k));
    }
    assert_eq!(elementary(&scalars(&[2, 3, 5]), 2), int(31));
    assert_eq!(homogeneous(&scalars(&[2, 3]), 2), int(19));
}

#[test]
fn combinatorial_counts() {
    assert_eq!(subset_counts(4), vec![1, 4, 6, 4, 1]);
    assert_eq!(set_partition_counts(4), vec![0, 1, 7, 6, 1]);
    assert_eq!(permutation_cycle_counts(4), vec![0, 6, 11, 6, 1]);
    let bell: Vec<i64> = (0..=8).map(|n| set_partition_counts(n).iter().sum()).collect();
    assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203, 877, 4140]);
    for n in 0..=8u32 {
        let row = set_partition_counts(n as usize);
        for k in 0..=n {
            assert_eq!(row[k as usize] as i128, stirling2_formula(n, k));
        }
        let cycles = permutation_cycle_counts(n as usize);
        let rising = stirling1_rising(n as usize);
        for k in 0..=n as usize {
            assert_eq!(cycles[k] as i128, rising[k]);
        }
    }
}

#[test]
fn konvalina_matches_symmetric_functions() {
    let mut r = rng(11);
    for _ in 0..50 {
        let w = scalars(&random_int_weights(&mut r, 6));
        let wv = WeightVector::explicit(w.clone());
        for k in 0..=7 {
            let e = newton_elementary(&w, k);
            assert_eq!(c_oracle(&wv, k), e);
            assert_eq!(c_value(&wv, k), e);
            let h = newton_homogeneous(&w, k);
            assert_eq!(s_oracle(&wv, k), h);
            assert_eq!(s_value(&wv, k), h);
        }
    }
}

#[test]
fn tables_match_enumeration() {
    let w = vec![int(2), s("q"), int(-1), int(4), s("q^2 - 1")];
    let wv = WeightVector::explicit(w.clone());
    let ct = c_table(&wv, 5).unwrap();
    let st = s_table(&wv, 6, 5).unwrap();
    for m in 0..=5 {
        for k in 0..=m {
            assert_eq!(ct[m][k], elementary(&w[..m], k));
        }
        for k in 0..=6 {
            assert_eq!(st[m][k], homogeneous(&w[..m], k));
        }
    }
}

#[test]
fn basic_values() {
    let w = WeightVector::from_ints(&[2, 3, 5]);
    assert!(c_value(&w, 0).is_one());
    assert!(c_value(&WeightVector::from_ints(&[]), 1).is_zero());
    assert_eq!(c_table(&w, 3).unwrap()[0], vec![Scalar::one()]);
    for m in 0..=6 {
        assert!(s_value(&WeightVector::naturals(m), 0).is_one());
    }
    assert_eq!(s_value(&WeightVector::from_ints(&[1, 2]), 2), int(7));
    assert_eq!(s_value(&WeightVector::q_powers(2), 1), s("1 + q"));
}

#[test]
fn sbar_boundary_values() {
    let w = WeightVector::from_ints(&[3, -2, 4, 1]);
    let t = sbar_table(&w, 5).unwrap();
    assert!(t[0][0].is_one());
    for n in 1..=5 {
        // S_n^0 of the empty prefix vanishes for n >= 1.
        assert!(t[n][0].is_zero());
        assert!(t[n][n].is_one());
    }
    for k in 1..=4 {
        assert!(sbar(&w, 0, k).unwrap().is_zero());
    }
    for n in 0..=5 {
        for k in 0..=n.min(4) {
            assert_eq!(t[n][k], homogeneous(&w.weights()[..k], n - k));
        }
    }
}

#[test]
fn second_kind_konvalina_triads() {
    // i_k = 1, q_k = w_k with w_0 = 0, d_k = 0 generates Sbar.
    let mut r = rng(5);
    for _ in 0..20 {
        let w = random_int_weights(&mut r, 6);
        let mut q = vec![Scalar::zero()];
        q.extend(scalars(&w));
        let spec = TriadSpec::new(
            "konvalina-second",
            Sequence::constant(Scalar::one()),
            Sequence::Table(q),
            Sequence::constant(Scalar::zero()),
        );
        let rows = w.len() + 1;
        let coeffs = triad_coefficients(&spec, rows).unwrap();
        let bar = sbar_table(&WeightVector::from_ints(&w), rows).unwrap();
        for n in 0..=rows {
            for k in 0..=n {
                assert_eq!(coeffs.get(n, k), bar[n][k]);
            }
        }
        assert!(verify_connection(&spec, w.len()).unwrap().passed());
    }
}

#[test]
fn triad_polynomials_have_closed_forms() {
    let x = Poly::x();
    let pascal = triad_polynomials(&TriadSpec::pascal(), 8).unwrap();
    let stirling = triad_polynomials(&TriadSpec::stirling2(), 8).unwrap();
    let gauss = triad_polynomials(&TriadSpec::gauss(), 8).unwrap();
    let mut falling = Poly::one();
    let mut qprod = Poly::one();
    for k in 0..=8 {
        assert_eq!(pascal[k], (&x - &Poly::one()).pow(k as u32));
        assert_eq!(stirling[k], falling);
        assert_eq!(gauss[k], qprod);
        falling = &falling * &Poly::x_minus(&int(k as i64));
        qprod = &qprod * &Poly::x_minus(&Scalar::q_pow(k));
    }
}

#[test]
fn families_match_enumeration() {
    for n in 0..=9usize {
        let subsets = subset_counts(n);
        let partitions = set_partition_counts(n);
        let cycles = permutation_cycle_counts(n);
        for k in 0..=n {
            assert_eq!(family_value(Family::Pascal, n, k).unwrap(), int(subsets[k]));
            assert_eq!(family_value(Family::Stirling2, n, k).unwrap(), int(partitions[k]));
            assert_eq!(family_value(Family::Stirling1, n, k).unwrap(), int(cycles[k]));
            assert_eq!(family_value(Family::GaussQ, n, k).unwrap(), gauss_by_inversions(n, k));
        }
    }
    assert!(family_value(Family::Stirling1, 0, 0).unwrap().is_one());
}

#[test]
fn psi_naturals_and_factorials() {
    let psi = PsiSequence::q_factorial();
    assert_eq!(psi.n_psi(3).unwrap(), s("1 + q + q^2"));
    let five = psi.n_psi(5).unwrap().specialize(&Rational::one()).unwrap();
    assert_eq!(five, int(5));
    for p in [PsiSequence::q_factorial(), PsiSequence::classical(), PsiSequence::fibonacci()] {
        assert!(p.factorial(0).unwrap().is_one());
    }
}

#[test]
fn mutator_eigenvalues() {
    let psi = PsiSequence::q_factorial();
    let op = qhat(&psi, 10).unwrap();
    for m in 0..=10 {
        assert_eq!(op.eigenvalue(m), &Scalar::q());
    }
    for e in 0..=6u32 {
        assert!(op.pow(e).is_multiplication_by(&Scalar::q_pow(e as usize)));
    }
    for n in 0..=6 {
        let nq = n_qhat(&psi, n, 10).unwrap();
        assert!(nq.is_multiplication_by(&psi.n_psi(n).unwrap()));
        for e in nq.eigenvalues() {
            assert_eq!(e.specialize(&Rational::one()).unwrap(), int(n as i64));
        }
    }
    let cube = Poly::monomial(Scalar::one(), 3);
    assert_eq!(op.apply(&cube).unwrap(), Poly::monomial(Scalar::q(), 3));
}

#[test]
fn psi_stirling_enumeration() {
    let classical = PsiSequence::classical();
    for n in 0..=8 {
        let partitions = set_partition_counts(n);
        let cycles = permutation_cycle_counts(n);
        for k in 0..=n {
            assert_eq!(psi_stirling2(&classical, n, k).unwrap(), int(partitions[k]));
            assert_eq!(psi_stirling1(&classical, n, k).unwrap(), int(cycles[k]));
        }
    }
    // Fibonacci weights (1, 1, 2, 3, 5): {n k}_F = h_{n-k}(F_1..F_k).
    let fib = PsiSequence::fibonacci();
    let f: Vec<Scalar> = [1, 1, 2, 3, 5].iter().map(|&v| int(v)).collect();
    for k in 0..=5 {
        for n in k..=k + 4 {
            assert_eq!(psi_stirling2(&fib, n, k).unwrap(), homogeneous(&f[..k], n - k));
        }
    }
}
