//! Dense unitary semantics.
//!
//! Basis convention: a sum lists all basis vectors of the left summand and
//! then all of the right; a product is lexicographic with the left factor
//! major (`index = i_a * dim(b) + i_b`). Under this convention the unit and
//! associativity primitives act as the identity on flat indices, so only the
//! swaps and distributors permute anything.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::matrix::CMatrix;
use crate::syntax::{Comb, Prim};
use crate::types::BaseType;

/// The explicit basis-index bijection denoted by a structural primitive.
///
/// Returns the image vector: input index `j` maps to output index `map[j]`.
/// Phases and hadamard are not index maps; they are handled in
/// [`eval_unitary`] directly.
pub fn index_map(prim: Prim, params: &[BaseType]) -> Vec<usize> {
    assert_eq!(params.len(), prim.arity());
    let dim = prim.comb_type(params).source.dim();
    match prim {
        Prim::Id
        | Prim::UnitAdd
        | Prim::UnitiAdd
        | Prim::AssocAdd
        | Prim::AssociAdd
        | Prim::UnitMul
        | Prim::UnitiMul
        | Prim::AssocMul
        | Prim::AssociMul => (0..dim).collect(),
        Prim::SwapAdd => {
            let da = params[0].dim();
            let db = params[1].dim();
            (0..da + db)
                .map(|i| if i < da { db + i } else { i - da })
                .collect()
        }
        Prim::SwapMul => {
            let da = params[0].dim();
            let db = params[1].dim();
            (0..da * db).map(|i| (i % db) * da + i / db).collect()
        }
        Prim::Distrib => {
            let da = params[0].dim();
            let db = params[1].dim();
            let dc = params[2].dim();
            (0..da * (db + dc))
                .map(|i| {
                    let a = i / (db + dc);
                    let j = i % (db + dc);
                    if j < db {
                        a * db + j
                    } else {
                        da * db + a * dc + (j - db)
                    }
                })
                .collect()
        }
        Prim::Distribi => invert_perm(&index_map(Prim::Distrib, params)),
        // b*0 and 0 are both zero-dimensional
        Prim::Distribo | Prim::Distriboi => Vec::new(),
    }
}

fn invert_perm(image: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; image.len()];
    for (j, &i) in image.iter().enumerate() {
        inv[i] = j;
    }
    inv
}

/// Evaluates a combinator to its unitary, a `dim(target) x dim(source)`
/// matrix. Sequencing multiplies in diagrammatic order, sums become block
/// diagonals, products become Kronecker products.
pub fn eval_unitary(c: &Comb) -> CMatrix {
    match c {
        Comb::Prim(p, params) => CMatrix::permutation(&index_map(*p, params)),
        Comb::Seq(a, b) => eval_unitary(b).mul(&eval_unitary(a)),
        Comb::SumPar(a, b) => eval_unitary(a).direct_sum(&eval_unitary(b)),
        Comb::ProdPar(a, b) => eval_unitary(a).kron(&eval_unitary(b)),
        Comb::Phase(theta) => {
            let mut m = CMatrix::zeros(1, 1);
            m[(0, 0)] = Comb::phase_value(*theta);
            m
        }
        Comb::Hadamard => hadamard_matrix(),
    }
}

pub fn hadamard_matrix() -> CMatrix {
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    CMatrix::from_rows(&[vec![s, s], vec![s, -s]])
}
