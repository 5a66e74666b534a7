//! Isometry semantics for the allocation arrow and channel semantics for the
//! hiding arrow.
//!
//! Choi convention: `Choi(Phi) = (id (x) Phi)(|Omega><Omega|)` with the
//! unnormalized `|Omega> = sum_i |i> (x) |i>`, laid out with the input index
//! major. Equal channels have equal Choi matrices, which is what the
//! equivalence checker decides; Kraus decompositions are not unique and are
//! never compared directly.

use num_complex::Complex64;

use crate::arrow_alloc::ArrowA;
use crate::arrow_hide::ArrowChi;
use crate::error::{Error, Result};
use crate::matrix::{CMatrix, DEFAULT_TOL};
use crate::unitary::eval_unitary;

/// A matrix with orthonormal columns; the denotation of an allocation-arrow
/// value. Zero-column isometries are legal (the unique map out of `0`).
#[derive(Debug, Clone, PartialEq)]
pub struct Isometry {
    matrix: CMatrix,
}

impl Isometry {
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn in_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn out_dim(&self) -> usize {
        self.matrix.rows()
    }

    /// V†V = I.
    pub fn is_isometry(&self, tol: f64) -> bool {
        self.matrix
            .dagger()
            .mul(&self.matrix)
            .is_identity(tol)
    }
}

/// The isometry denoted by an allocation-arrow value: the body's unitary
/// restricted to the input block (its first `dim(source)` columns).
pub fn iso_of(a: &ArrowA) -> Isometry {
    let u = eval_unitary(a.body());
    Isometry {
        matrix: u.first_columns(a.source().dim()),
    }
}

/// A completely positive trace-preserving map, presented by Kraus operators
/// with the Choi matrix cached for equality checking.
#[derive(Debug, Clone)]
pub struct Channel {
    in_dim: usize,
    out_dim: usize,
    kraus: Vec<CMatrix>,
    choi: CMatrix,
}

impl Channel {
    /// Builds a channel from Kraus operators, checking trace preservation and
    /// positivity of the Choi matrix. These hold by construction for every
    /// channel this crate produces, so a violation is a bug, not bad input.
    pub fn from_kraus(in_dim: usize, out_dim: usize, kraus: Vec<CMatrix>) -> Channel {
        let mut sum = CMatrix::zeros(in_dim, in_dim);
        for k in &kraus {
            assert_eq!((k.rows(), k.cols()), (out_dim, in_dim), "kraus shape");
            sum = sum.add(&k.dagger().mul(k));
        }
        assert!(
            sum.is_identity(DEFAULT_TOL),
            "kraus operators do not preserve trace (max diff {:.3e})",
            sum.max_diff(&CMatrix::identity(in_dim))
        );
        let choi = choi_of_kraus(in_dim, out_dim, &kraus);
        assert!(choi.is_psd(DEFAULT_TOL), "choi matrix not positive semidefinite");
        Channel { in_dim, out_dim, kraus, choi }
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    pub fn choi(&self) -> &CMatrix {
        &self.choi
    }

    /// Applies the channel to a density matrix.
    pub fn apply(&self, rho: &CMatrix) -> Result<CMatrix> {
        check_state(rho, self.in_dim, DEFAULT_TOL)?;
        let mut out = CMatrix::zeros(self.out_dim, self.out_dim);
        for k in &self.kraus {
            out = out.add(&k.mul(rho).mul(&k.dagger()));
        }
        Ok(out)
    }
}

/// Validates a density matrix: square of the right dimension, Hermitian,
/// unit trace, positive semidefinite.
pub fn check_state(rho: &CMatrix, dim: usize, tol: f64) -> Result<()> {
    if rho.rows() != dim || rho.cols() != dim {
        return Err(Error::BadState(format!(
            "expected a {dim}x{dim} density matrix, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    if !rho.is_hermitian(tol) {
        return Err(Error::BadState("matrix is not Hermitian".into()));
    }
    if (rho.trace() - Complex64::new(1.0, 0.0)).norm() > tol {
        return Err(Error::BadState(format!("trace is {}, not 1", rho.trace().re)));
    }
    if !rho.is_psd(tol) {
        return Err(Error::BadState("matrix is not positive semidefinite".into()));
    }
    Ok(())
}

fn choi_of_kraus(in_dim: usize, out_dim: usize, kraus: &[CMatrix]) -> CMatrix {
    let n = in_dim * out_dim;
    let mut choi = CMatrix::zeros(n, n);
    for k in kraus {
        // (I (x) K)|Omega> = sum_i |i> (x) K|i>
        for i in 0..in_dim {
            for j in 0..in_dim {
                for b in 0..out_dim {
                    for b2 in 0..out_dim {
                        choi[(i * out_dim + b, j * out_dim + b2)] +=
                            k[(b, i)] * k[(b2, j)].conj();
                    }
                }
            }
        }
    }
    choi
}

/// The channel denoted by a hiding-arrow value, by Stinespring: the flattened
/// isometry `V : source -> target x garbage` followed by tracing out the
/// garbage. Kraus operators are `K_g = (I (x) <g|) V` for each garbage basis
/// vector.
pub fn channel_of(c: &ArrowChi) -> Channel {
    let v = iso_of(c.inner());
    let da = c.source().dim();
    let db = c.target().dim();
    let dg = c.garbage().dim();
    let kraus = (0..dg)
        .map(|g| CMatrix::from_fn(db, da, |b, a| v.matrix()[(b * dg + g, a)]))
        .collect();
    Channel::from_kraus(da, db, kraus)
}

/// Semantic equality of allocation-arrow values: equality of isometries.
pub fn iso_equal_tol(a1: &ArrowA, a2: &ArrowA, tol: f64) -> Result<bool> {
    if a1.source() != a2.source() || a1.target() != a2.target() {
        return Err(Error::TypeMismatch(format!(
            "cannot compare `{} >-> {}` with `{} >-> {}`",
            a1.source(),
            a1.target(),
            a2.source(),
            a2.target()
        )));
    }
    Ok(iso_of(a1).matrix().approx_eq(iso_of(a2).matrix(), tol))
}

pub fn iso_equal(a1: &ArrowA, a2: &ArrowA) -> Result<bool> {
    iso_equal_tol(a1, a2, DEFAULT_TOL)
}

/// Semantic equality of hiding-arrow values: equality of Choi matrices.
pub fn chan_equal_tol(c1: &ArrowChi, c2: &ArrowChi, tol: f64) -> Result<bool> {
    if c1.source() != c2.source() || c1.target() != c2.target() {
        return Err(Error::TypeMismatch(format!(
            "cannot compare `{} ~> {}` with `{} ~> {}`",
            c1.source(),
            c1.target(),
            c2.source(),
            c2.target()
        )));
    }
    Ok(channel_of(c1).choi().approx_eq(channel_of(c2).choi(), tol))
}

pub fn chan_equal(c1: &ArrowChi, c2: &ArrowChi) -> Result<bool> {
    chan_equal_tol(c1, c2, DEFAULT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrow_alloc::{arr_a, alloc_a, clone_a, compose_a, inl_a, inr_a, right_a, sum_a};
    use crate::arrow_hide::{arr_chi, compose_chi, discard_chi, fst_chi, measure_chi, merge_chi};
    use crate::macros::{expand_gate, Gate};
    use crate::syntax::Comb;
    use crate::types::BaseType::{self, One, Zero};
    use crate::unitary::hadamard_matrix;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn qbit() -> BaseType {
        BaseType::qbit()
    }

    fn plus_state() -> CMatrix {
        CMatrix::from_fn(2, 2, |_, _| c64(0.5, 0.0))
    }

    #[test]
    fn iso_of_arr_hadamard_is_full_matrix() {
        let a = arr_a(Comb::Hadamard);
        assert!(iso_of(&a).matrix().approx_eq(&hadamard_matrix(), 1e-12));
    }

    #[test]
    fn iso_of_inl_is_first_column() {
        let a = inl_a(One, One);
        let v = iso_of(&a);
        assert_eq!((v.out_dim(), v.in_dim()), (2, 1));
        assert_eq!(v.matrix()[(0, 0)], c64(1.0, 0.0));
        assert_eq!(v.matrix()[(1, 0)], c64(0.0, 0.0));
    }

    #[test]
    fn iso_of_lifted_hadamard_is_plus_column() {
        let a = crate::arrow_alloc::lift_a(Comb::Hadamard).unwrap();
        let v = iso_of(&a);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((v.matrix()[(0, 0)] - c64(s, 0.0)).norm() < 1e-12);
        assert!((v.matrix()[(1, 0)] - c64(s, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn iso_of_clone_maps_basis_to_pairs() {
        let v = iso_of(&clone_a(&qbit()));
        assert_eq!((v.out_dim(), v.in_dim()), (4, 2));
        // |0> -> |00>, |1> -> |11>
        let expect = CMatrix::from_fn(4, 2, |i, j| {
            if (j == 0 && i == 0) || (j == 1 && i == 3) {
                c64(1.0, 0.0)
            } else {
                c64(0.0, 0.0)
            }
        });
        assert!(v.matrix().approx_eq(&expect, 1e-12));
    }

    #[test]
    fn alloc_iso_has_zero_columns() {
        let v = iso_of(&alloc_a(qbit()));
        assert_eq!((v.out_dim(), v.in_dim()), (2, 0));
        assert!(v.is_isometry(1e-12));
    }

    #[test]
    fn alloc_then_unit_keeps_zero_columns() {
        let c = compose_a(&alloc_a(One), &arr_a(Comb::uniti_mul(One))).unwrap();
        let v = iso_of(&c);
        assert_eq!((v.out_dim(), v.in_dim()), (1, 0));
    }

    #[test]
    fn inl_then_swap_is_inr() {
        let c = compose_a(
            &inl_a(qbit(), One),
            &arr_a(Comb::swap_add(qbit(), One)),
        )
        .unwrap();
        assert!(iso_equal(&c, &inr_a(One, qbit())).unwrap());
    }

    #[test]
    fn inl_equals_derived_form() {
        // inl = arr(uniti+) >>> right(alloc)
        let a = qbit();
        let b = One;
        let derived = compose_a(
            &arr_a(Comb::uniti_add(a.clone())),
            &right_a(&alloc_a(b.clone()), a.clone()),
        )
        .unwrap();
        assert!(iso_equal(&derived, &inl_a(a, b)).unwrap());
    }

    #[test]
    fn sum_is_block_diagonal() {
        let c1 = arr_a(Comb::Hadamard);
        let c2 = arr_a(expand_gate(Gate::S));
        let s = sum_a(&c1, &c2);
        let expect = iso_of(&c1).matrix().direct_sum(iso_of(&c2).matrix());
        assert!(iso_of(&s).matrix().approx_eq(&expect, 1e-12));
    }

    #[test]
    fn measure_decoheres_plus_state() {
        let m = channel_of(&measure_chi(&qbit()));
        let out = m.apply(&plus_state()).unwrap();
        let expect = CMatrix::from_fn(2, 2, |i, j| if i == j { c64(0.5, 0.0) } else { c64(0.0, 0.0) });
        assert!(out.approx_eq(&expect, 1e-9));
    }

    #[test]
    fn measure_fixes_classical_state() {
        let m = channel_of(&measure_chi(&qbit()));
        let one = CMatrix::from_fn(2, 2, |i, j| if i == 1 && j == 1 { c64(1.0, 0.0) } else { c64(0.0, 0.0) });
        let out = m.apply(&one).unwrap();
        assert!(out.approx_eq(&one, 1e-9));
    }

    #[test]
    fn hadamard_basis_measurement_fixes_plus() {
        let h = arr_chi(arr_a(Comb::Hadamard));
        let m = measure_chi(&qbit());
        let hmh = compose_chi(&compose_chi(&h, &m).unwrap(), &h).unwrap();
        let out = channel_of(&hmh).apply(&plus_state()).unwrap();
        assert!(out.approx_eq(&plus_state(), 1e-9));
    }

    #[test]
    fn pure_channel_is_conjugation() {
        let ch = channel_of(&arr_chi(arr_a(Comb::Hadamard)));
        assert_eq!(ch.kraus().len(), 1);
        let rho = CMatrix::from_fn(2, 2, |i, j| if i == 0 && j == 0 { c64(1.0, 0.0) } else { c64(0.0, 0.0) });
        let out = ch.apply(&rho).unwrap();
        assert!(out.approx_eq(&plus_state(), 1e-9));
    }

    #[test]
    fn discard_is_trace() {
        let d = channel_of(&discard_chi(&qbit()));
        assert_eq!((d.in_dim(), d.out_dim()), (2, 1));
        let out = d.apply(&plus_state()).unwrap();
        assert!((out[(0, 0)] - c64(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn merge_on_unit_is_trace() {
        let m = channel_of(&merge_chi(&One));
        assert_eq!((m.in_dim(), m.out_dim()), (2, 1));
        let rho = CMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                c64(if i == 0 { 0.25 } else { 0.75 }, 0.0)
            } else {
                c64(0.1, 0.0)
            }
        });
        let out = m.apply(&rho).unwrap();
        assert!((out[(0, 0)] - c64(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn measure_idempotent() {
        let m = measure_chi(&qbit());
        let mm = compose_chi(&m, &m).unwrap();
        assert!(chan_equal(&mm, &m).unwrap());
    }

    #[test]
    fn unitary_differs_from_measurement() {
        let px = arr_chi(arr_a(expand_gate(Gate::Px)));
        let m = measure_chi(&qbit());
        assert!(!chan_equal(&px, &m).unwrap());
        // and mismatched types refuse to compare
        let d = discard_chi(&qbit());
        assert_eq!(chan_equal(&px, &d).unwrap_err().kind(), "TypeMismatch");
    }

    #[test]
    fn clone_entangles_plus_state() {
        // clone then nothing: |+> becomes the Bell projector
        let cl = arr_chi(clone_a(&qbit()));
        let out = channel_of(&cl).apply(&plus_state()).unwrap();
        let mut expect = CMatrix::zeros(4, 4);
        for &i in &[0usize, 3] {
            for &j in &[0usize, 3] {
                expect[(i, j)] = c64(0.5, 0.0);
            }
        }
        assert!(out.approx_eq(&expect, 1e-9));
    }

    #[test]
    fn fst_is_partial_trace() {
        // rho (x) sigma |-> rho
        let f = channel_of(&fst_chi(qbit(), qbit()));
        let rho = CMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                c64(if i == 0 { 0.7 } else { 0.3 }, 0.0)
            } else {
                c64(0.0, 0.1 * if i < j { 1.0 } else { -1.0 })
            }
        });
        let sigma = plus_state();
        let joint = rho.kron(&sigma);
        let out = f.apply(&joint).unwrap();
        assert!(out.approx_eq(&rho, 1e-9));
    }

    #[test]
    fn apply_rejects_bad_states() {
        let ch = channel_of(&measure_chi(&qbit()));
        // wrong dimension
        assert_eq!(ch.apply(&CMatrix::identity(3)).unwrap_err().kind(), "BadState");
        // not trace one
        assert_eq!(ch.apply(&CMatrix::identity(2)).unwrap_err().kind(), "BadState");
        // not hermitian
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 1)] = c64(1.0, 0.0);
        m[(0, 0)] = c64(1.0, 0.0);
        assert_eq!(ch.apply(&m).unwrap_err().kind(), "BadState");
        // hermitian, trace 1, but not PSD
        let mut n = CMatrix::zeros(2, 2);
        n[(0, 0)] = c64(1.5, 0.0);
        n[(1, 1)] = c64(-0.5, 0.0);
        assert_eq!(ch.apply(&n).unwrap_err().kind(), "BadState");
    }
}
