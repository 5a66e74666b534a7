//! Derived combinators: the midswaps, superposition, the gate library, and
//! the `ctrl` meta-combinator. All of these are aliases that expand to plain
//! combinator terms; no expansion is recursive.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::syntax::Comb;
use crate::types::BaseType;

/// `(b1+b2)+(b3+b4) <-> (b1+b3)+(b2+b4)`
pub fn midswap_add(b1: BaseType, b2: BaseType, b3: BaseType, b4: BaseType) -> Comb {
    let s = BaseType::sum;
    Comb::assoc_add(b1.clone(), b2.clone(), s(b3.clone(), b4.clone()))
        .seq(Comb::id(b1.clone()).sum_par(Comb::associ_add(b2.clone(), b3.clone(), b4.clone())))
        .seq(Comb::id(b1.clone()).sum_par(
            Comb::swap_add(b2.clone(), b3.clone()).sum_par(Comb::id(b4.clone())),
        ))
        .seq(Comb::id(b1.clone()).sum_par(Comb::assoc_add(b3.clone(), b2.clone(), b4.clone())))
        .seq(Comb::associ_add(b1, b3, s(b2, b4)))
}

/// `(b1*b2)*(b3*b4) <-> (b1*b3)*(b2*b4)`
pub fn midswap_mul(b1: BaseType, b2: BaseType, b3: BaseType, b4: BaseType) -> Comb {
    let p = BaseType::prod;
    Comb::assoc_mul(b1.clone(), b2.clone(), p(b3.clone(), b4.clone()))
        .seq(Comb::id(b1.clone()).prod_par(Comb::associ_mul(b2.clone(), b3.clone(), b4.clone())))
        .seq(Comb::id(b1.clone()).prod_par(
            Comb::swap_mul(b2.clone(), b3.clone()).prod_par(Comb::id(b4.clone())),
        ))
        .seq(Comb::id(b1.clone()).prod_par(Comb::assoc_mul(b3.clone(), b2.clone(), b4.clone())))
        .seq(Comb::associ_mul(b1, b3, p(b2, b4)))
}

/// The polymorphic variant of hadamard: `b+b <-> b+b`, mapping `inl(psi)` to
/// `(inl(psi)+inr(psi))/sqrt(2)` and `inr(psi)` to `(inl(psi)-inr(psi))/sqrt(2)`.
pub fn superposition(b: BaseType) -> Comb {
    Comb::uniti_mul(b.clone())
        .sum_par(Comb::uniti_mul(b.clone()))
        .seq(Comb::distribi(b.clone(), BaseType::One, BaseType::One))
        .seq(Comb::id(b.clone()).prod_par(Comb::Hadamard))
        .seq(Comb::distrib(b.clone(), BaseType::One, BaseType::One))
        .seq(Comb::unit_mul(b.clone()).sum_par(Comb::unit_mul(b)))
}

/// The controlled-gate meta-combinator: for `c : b <-> b`, produces
/// `qbit*b <-> qbit*b` acting as `c` on the second component exactly when the
/// control is `|1>`.
pub fn ctrl(c: Comb) -> Result<Comb> {
    let t = c.ty();
    if t.source != t.target {
        return Err(Error::TypeMismatch(format!(
            "ctrl needs an endo-combinator, got {}",
            t
        )));
    }
    let b = t.source;
    let q = BaseType::qbit();
    Ok(Comb::swap_mul(q.clone(), b.clone())
        .seq(Comb::distrib(b.clone(), BaseType::One, BaseType::One))
        .seq(Comb::unit_mul(b.clone()).sum_par(Comb::unit_mul(b.clone())))
        .seq(Comb::id(b.clone()).sum_par(c))
        .seq(Comb::uniti_mul(b.clone()).sum_par(Comb::uniti_mul(b.clone())))
        .seq(Comb::distribi(b.clone(), BaseType::One, BaseType::One))
        .seq(Comb::swap_mul(b, q)))
}

/// Multiplies a combinator by a global phase e^(i*theta).
pub fn phase_mul(theta: f64, c: Comb) -> Comb {
    let t = c.ty();
    Comb::uniti_mul(t.source)
        .seq(c.prod_par(Comb::phase(theta)))
        .seq(Comb::unit_mul(t.target))
}

/// The fixed gate library on qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Px,
    Py,
    Pz,
    S,
    T,
    Cnot,
    Toffoli,
    Fredkin,
}

pub fn expand_gate(g: Gate) -> Comb {
    let one = BaseType::One;
    match g {
        Gate::Px => Comb::swap_add(one.clone(), one),
        Gate::Py => expand_gate(Gate::Px)
            .seq(Comb::phase(-FRAC_PI_2).sum_par(Comb::phase(FRAC_PI_2))),
        Gate::Pz => Comb::id(one).sum_par(Comb::phase(PI)),
        Gate::S => Comb::id(one).sum_par(Comb::phase(FRAC_PI_2)),
        Gate::T => Comb::id(one).sum_par(Comb::phase(FRAC_PI_4)),
        Gate::Cnot => ctrl(expand_gate(Gate::Px)).unwrap(),
        Gate::Toffoli => ctrl(expand_gate(Gate::Cnot)).unwrap(),
        Gate::Fredkin => ctrl(Comb::swap_mul(BaseType::qbit(), BaseType::qbit())).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CMatrix;
    use crate::unitary::{eval_unitary, hadamard_matrix};
    use num_complex::Complex64;

    #[test]
    fn pz_is_id_plus_phase() {
        let pz = expand_gate(Gate::Pz);
        assert_eq!(pz, Comb::id(BaseType::One).sum_par(Comb::phase(PI)));
    }

    #[test]
    fn midswap_types() {
        use crate::types::BaseType::{One, Zero};
        let q = BaseType::qbit();
        let m = midswap_add(One, Zero, q.clone(), One);
        let t = m.ty();
        assert_eq!(t.source, BaseType::sum(BaseType::sum(One, Zero), BaseType::sum(q.clone(), One)));
        assert_eq!(t.target, BaseType::sum(BaseType::sum(One, q.clone()), BaseType::sum(Zero, One)));
        let m = midswap_mul(q.clone(), q.clone(), q.clone(), q.clone());
        let t = m.ty();
        assert_eq!(t.source.dim(), 16);
        assert!(eval_unitary(&m).is_unitary(1e-9));
    }

    #[test]
    fn midswap_mul_matches_index_oracle() {
        // (a,b,c,d) -> (a,c,b,d) on flat indices, all dims 2
        let q = BaseType::qbit();
        let m = eval_unitary(&midswap_mul(q.clone(), q.clone(), q.clone(), q.clone()));
        let mut image = vec![0usize; 16];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        image[((a * 2 + b) * 2 + c) * 2 + d] = ((a * 2 + c) * 2 + b) * 2 + d;
                    }
                }
            }
        }
        assert!(m.approx_eq(&CMatrix::permutation(&image), 1e-12));
    }

    #[test]
    fn superposition_block_matrix() {
        // (1/sqrt2) [[I, I], [I, -I]] of size 2*dim(b)
        let b = BaseType::sum(BaseType::qbit(), BaseType::One);
        let d = b.dim();
        let m = eval_unitary(&superposition(b));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let expect = CMatrix::from_fn(2 * d, 2 * d, |i, j| {
            if i % d != j % d {
                Complex64::new(0.0, 0.0)
            } else if i < d || j < d {
                Complex64::new(s, 0.0)
            } else {
                Complex64::new(-s, 0.0)
            }
        });
        assert!(m.approx_eq(&expect, 1e-12));
    }

    #[test]
    fn superposition_unit_is_hadamard() {
        let m = eval_unitary(&superposition(BaseType::One));
        assert!(m.approx_eq(&hadamard_matrix(), 1e-12));
    }

    #[test]
    fn ctrl_rejects_non_endo() {
        let c = Comb::unit_add(BaseType::qbit());
        assert_eq!(ctrl(c).unwrap_err().kind(), "TypeMismatch");
    }

    #[test]
    fn phase_mul_scales() {
        let c = phase_mul(PI, Comb::id(BaseType::qbit()));
        let m = eval_unitary(&c);
        let expect = CMatrix::identity(2).scale(Complex64::new(-1.0, 0.0));
        assert!(m.approx_eq(&expect, 1e-12));
    }

    #[test]
    fn gate_matrices() {
        let y = eval_unitary(&expand_gate(Gate::Py));
        let i = Complex64::new(0.0, 1.0);
        let z0 = Complex64::new(0.0, 0.0);
        let expect = CMatrix::from_rows(&[vec![z0, -i], vec![i, z0]]);
        assert!(y.approx_eq(&expect, 1e-12));

        let t = eval_unitary(&expand_gate(Gate::T));
        let e = Complex64::from_polar(1.0, FRAC_PI_4);
        assert!((t[(1, 1)] - e).norm() < 1e-15);

        let f = eval_unitary(&expand_gate(Gate::Fredkin));
        assert!(f.approx_eq(&CMatrix::permutation(&[0, 1, 2, 3, 4, 6, 5, 7]), 1e-12));
    }
}
