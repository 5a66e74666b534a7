//! The hiding arrow: combinators that may produce inhabited garbage.
//!
//! A value is kept flattened: the underlying allocation-arrow value has
//! target `target x garbage`, so the whole thing is a single heap, a single
//! garbage type, and one reversible body `source + heap <-> target x garbage`.
//! Garbage inhabitation is enforced at construction; the inhabitant used by
//! `left_chi` is the canonical left-biased one.

use crate::arrow_alloc::{
    arr_a, clone_a, compose_a, inhab_a, prod_a, sum_a, alloc_a, ArrowA,
};
use crate::error::{Error, Result};
use crate::macros::midswap_mul;
use crate::syntax::Comb;
use crate::types::BaseType;

/// A normal-form value of the hiding arrow: `source ~> target` with hidden
/// heap and garbage.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrowChi {
    target: BaseType,
    garbage: BaseType,
    inner: ArrowA,
}

impl ArrowChi {
    fn from_parts(inner: ArrowA, target: BaseType, garbage: BaseType) -> ArrowChi {
        assert_eq!(
            *inner.target(),
            BaseType::prod(target.clone(), garbage.clone()),
            "inner target must be target x garbage"
        );
        assert!(garbage.inhabited(), "garbage must be inhabited");
        ArrowChi { target, garbage, inner }
    }

    pub fn source(&self) -> &BaseType {
        self.inner.source()
    }

    pub fn target(&self) -> &BaseType {
        &self.target
    }

    pub fn garbage(&self) -> &BaseType {
        &self.garbage
    }

    pub fn heap(&self) -> &BaseType {
        self.inner.heap()
    }

    /// The underlying allocation-arrow value of type
    /// `source >-> target x garbage`.
    pub fn inner(&self) -> &ArrowA {
        &self.inner
    }
}

/// Lifts `v : b1 >-> b2 x b3`, reading the right factor off as garbage.
pub fn lift_chi(v: ArrowA) -> Result<ArrowChi> {
    match v.target().clone() {
        BaseType::Prod(b, g) => {
            if !g.inhabited() {
                return Err(Error::GarbageUninhabited(g.to_string()));
            }
            Ok(ArrowChi::from_parts(v, *b, *g))
        }
        other => Err(Error::NotLiftable(format!(
            "target type `{}` is not a product",
            other
        ))),
    }
}

/// Embeds an allocation-arrow value with the trivial garbage `1`.
pub fn arr_chi(v: ArrowA) -> ArrowChi {
    let b = v.target().clone();
    let inner = compose_a(&v, &arr_a(Comb::uniti_mul(b.clone()))).expect("uniti composes");
    ArrowChi::from_parts(inner, b, BaseType::One)
}

/// Sequential composition; garbage accumulates as `g2 x g1`.
pub fn compose_chi(c1: &ArrowChi, c2: &ArrowChi) -> Result<ArrowChi> {
    if c1.target != *c2.source() {
        return Err(Error::TypeMismatch(format!(
            "cannot compose `{} ~> {}` with `{} ~> {}`",
            c1.source(),
            c1.target,
            c2.source(),
            c2.target
        )));
    }
    let g1 = c1.garbage.clone();
    let g2 = c2.garbage.clone();
    let b3 = c2.target.clone();
    let step = prod_a(&c2.inner, &arr_a(Comb::id(g1.clone())));
    let inner = compose_a(&c1.inner, &step)?;
    let inner = compose_a(
        &inner,
        &arr_a(Comb::assoc_mul(b3.clone(), g2.clone(), g1.clone())),
    )?;
    Ok(ArrowChi::from_parts(inner, b3, BaseType::prod(g2, g1)))
}

/// Parallel product; the midswap moves both garbages to the right.
pub fn prod_chi(c1: &ArrowChi, c2: &ArrowChi) -> ArrowChi {
    let (b1, g1) = (c1.target.clone(), c1.garbage.clone());
    let (b2, g2) = (c2.target.clone(), c2.garbage.clone());
    let par = prod_a(&c1.inner, &c2.inner);
    let inner = compose_a(&par, &arr_a(midswap_mul(b1.clone(), g1.clone(), b2.clone(), g2.clone())))
        .expect("midswap composes");
    ArrowChi::from_parts(
        inner,
        BaseType::prod(b1, b2),
        BaseType::prod(g1, g2),
    )
}

/// Choice on the left: `left_chi(c, b3) : b1 + b3 ~> b2 + b3`. The identity
/// branch's trivial garbage is upgraded to `c`'s garbage type through the
/// canonical inhabitant, then distributivity pulls the garbage out.
pub fn left_chi(c: &ArrowChi, b3: BaseType) -> ArrowChi {
    let b2 = c.target.clone();
    let g = c.garbage.clone();
    let bg = BaseType::prod(b2.clone(), g.clone());
    let inhab = inhab_a(&g).expect("garbage is inhabited");
    let step1 = sum_a(&c.inner, &arr_a(Comb::uniti_mul(b3.clone())));
    let step2 = sum_a(
        &arr_a(Comb::id(bg)),
        &prod_a(&arr_a(Comb::id(b3.clone())), &inhab),
    );
    let step3 = sum_a(
        &arr_a(Comb::swap_mul(b2.clone(), g.clone())),
        &arr_a(Comb::swap_mul(b3.clone(), g.clone())),
    );
    let step4 = arr_a(Comb::distribi(g.clone(), b2.clone(), b3.clone()));
    let step5 = arr_a(Comb::swap_mul(g.clone(), BaseType::sum(b2.clone(), b3.clone())));
    let inner = [step2, step3, step4, step5]
        .into_iter()
        .fold(step1, |acc, s| compose_a(&acc, &s).expect("left_chi chain composes"));
    ArrowChi::from_parts(inner, BaseType::sum(b2, b3), g)
}

/// Choice on the right, by conjugating `left_chi` with the additive swap.
pub fn right_chi(c: &ArrowChi, b3: BaseType) -> ArrowChi {
    let (b1, b2) = (c.source().clone(), c.target.clone());
    let pre = arr_chi(arr_a(Comb::swap_add(b3.clone(), b1)));
    let post = arr_chi(arr_a(Comb::swap_add(b2, b3.clone())));
    let mid = left_chi(c, b3);
    compose_chi(&compose_chi(&pre, &mid).expect("right pre"), &post).expect("right post")
}

/// Parallel choice `c1 +++ c2 = left(c1) >>> right(c2)`.
pub fn sum_chi(c1: &ArrowChi, c2: &ArrowChi) -> ArrowChi {
    let l = left_chi(c1, c2.source().clone());
    let r = right_chi(c2, c1.target.clone());
    compose_chi(&l, &r).expect("choice composes")
}

pub fn first_chi(c: &ArrowChi, b: BaseType) -> ArrowChi {
    prod_chi(c, &arr_chi(arr_a(Comb::id(b))))
}

pub fn second_chi(c: &ArrowChi, b: BaseType) -> ArrowChi {
    prod_chi(&arr_chi(arr_a(Comb::id(b))), c)
}

/// A canonical reversible identification of a dimension-zero type with `0`.
fn zero_iso(b: &BaseType) -> Comb {
    debug_assert_eq!(b.dim(), 0);
    match b {
        BaseType::Zero => Comb::id(BaseType::Zero),
        BaseType::Sum(x, y) => zero_iso(x)
            .sum_par(zero_iso(y))
            .seq(Comb::unit_add(BaseType::Zero)),
        BaseType::Prod(x, y) => {
            if y.dim() == 0 {
                Comb::id((**x).clone())
                    .prod_par(zero_iso(y))
                    .seq(Comb::distribo((**x).clone()))
            } else {
                Comb::swap_mul((**x).clone(), (**y).clone())
                    .seq(Comb::id((**y).clone()).prod_par(zero_iso(x)))
                    .seq(Comb::distribo((**y).clone()))
            }
        }
        BaseType::One => unreachable!("1 has dimension 1"),
    }
}

/// Discarding `b ~> 1`. Inhabited types are their own garbage; the empty
/// type first allocates a unit to discard; other dimension-zero types route
/// through their identification with `0`.
pub fn discard_chi(b: &BaseType) -> ArrowChi {
    if b.inhabited() {
        let u = Comb::uniti_mul(b.clone()).seq(Comb::swap_mul(b.clone(), BaseType::One));
        lift_chi(arr_a(u)).expect("inhabited garbage")
    } else if *b == BaseType::Zero {
        let inner = compose_a(&alloc_a(BaseType::One), &arr_a(Comb::uniti_mul(BaseType::One)))
            .expect("alloc composes");
        lift_chi(inner).expect("unit garbage")
    } else {
        let to_zero = arr_chi(arr_a(zero_iso(b)));
        compose_chi(&to_zero, &discard_chi(&BaseType::Zero)).expect("zero route composes")
    }
}

/// First projection `a x b ~> a`: the lift of the identity when `b` can
/// serve as garbage, otherwise discarding `b` explicitly.
pub fn fst_chi(a: BaseType, b: BaseType) -> ArrowChi {
    if b.inhabited() {
        lift_chi(arr_a(Comb::id(BaseType::prod(a, b)))).expect("inhabited garbage")
    } else {
        let dis = prod_chi(&arr_chi(arr_a(Comb::id(a.clone()))), &discard_chi(&b));
        compose_chi(&dis, &arr_chi(arr_a(Comb::unit_mul(a)))).expect("unit composes")
    }
}

/// Second projection `a x b ~> b`: the lift of the multiplicative swap, or
/// the first projection after swapping when `a` cannot serve as garbage.
pub fn snd_chi(a: BaseType, b: BaseType) -> ArrowChi {
    if a.inhabited() {
        lift_chi(arr_a(Comb::swap_mul(a, b))).expect("inhabited garbage")
    } else {
        let pre = arr_chi(arr_a(Comb::swap_mul(a.clone(), b.clone())));
        compose_chi(&pre, &fst_chi(b, a)).expect("swap composes")
    }
}

/// Merging two identical branches, `b + b ~> b`, via `b + b = b x (1+1)`.
pub fn merge_chi(b: &BaseType) -> ArrowChi {
    let one = BaseType::One;
    let pre = sum_chi(
        &arr_chi(arr_a(Comb::uniti_mul(b.clone()))),
        &arr_chi(arr_a(Comb::uniti_mul(b.clone()))),
    );
    let factor = arr_chi(arr_a(Comb::distribi(b.clone(), one.clone(), one)));
    let proj = fst_chi(b.clone(), BaseType::qbit());
    compose_chi(&compose_chi(&pre, &factor).expect("merge factors"), &proj)
        .expect("merge projects")
}

/// Measurement in the computational basis: clone, then forget the copy.
pub fn measure_chi(b: &BaseType) -> ArrowChi {
    let cl = arr_chi(clone_a(b));
    compose_chi(&cl, &fst_chi(b.clone(), b.clone())).expect("measure composes")
}
