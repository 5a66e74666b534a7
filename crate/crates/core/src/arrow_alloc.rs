//! The allocation arrow: combinators with a hidden heap.
//!
//! Values are kept in lift-normal form: a single heap type together with a
//! single reversible body of type `source + heap <-> target`. Every
//! meta-combinator below computes the composed body directly in that form,
//! so equality checking and the semantics stay one-pass.

use crate::error::{Error, Result};
use crate::macros::{midswap_add, midswap_mul};
use crate::syntax::Comb;
use crate::types::BaseType;

/// A normal-form value of the allocation arrow: `source >-> target` with a
/// hidden heap.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrowA {
    source: BaseType,
    target: BaseType,
    heap: BaseType,
    body: Comb,
}

impl ArrowA {
    fn from_parts(source: BaseType, target: BaseType, heap: BaseType, body: Comb) -> ArrowA {
        let t = body.ty();
        assert_eq!(t.source, BaseType::sum(source.clone(), heap.clone()), "bad arrow body source");
        assert_eq!(t.target, target, "bad arrow body target");
        ArrowA { source, target, heap, body }
    }

    pub fn source(&self) -> &BaseType {
        &self.source
    }

    pub fn target(&self) -> &BaseType {
        &self.target
    }

    pub fn heap(&self) -> &BaseType {
        &self.heap
    }

    /// The reversible body, of type `source + heap <-> target`.
    pub fn body(&self) -> &Comb {
        &self.body
    }
}

/// Lifts a combinator `u : b1 + b3 <-> b2`, reading the right summand of its
/// source off as the heap.
pub fn lift_a(u: Comb) -> Result<ArrowA> {
    let t = u.ty();
    match t.source {
        BaseType::Sum(a, h) => Ok(ArrowA::from_parts(*a, t.target, *h, u)),
        other => Err(Error::NotLiftable(format!(
            "source type `{}` is not a sum",
            other
        ))),
    }
}

/// Embeds a pure combinator with the trivial heap `0`.
pub fn arr_a(u: Comb) -> ArrowA {
    let t = u.ty();
    let body = Comb::unit_add(t.source.clone()).seq(u);
    ArrowA::from_parts(t.source, t.target, BaseType::Zero, body)
}

/// Sequential composition; both heaps are kept side by side.
pub fn compose_a(c1: &ArrowA, c2: &ArrowA) -> Result<ArrowA> {
    if c1.target != c2.source {
        return Err(Error::TypeMismatch(format!(
            "cannot compose `{} >-> {}` with `{} >-> {}`",
            c1.source, c1.target, c2.source, c2.target
        )));
    }
    let heap = BaseType::sum(c1.heap.clone(), c2.heap.clone());
    let body = Comb::associ_add(c1.source.clone(), c1.heap.clone(), c2.heap.clone())
        .seq(c1.body.clone().sum_par(Comb::id(c2.heap.clone())))
        .seq(c2.body.clone());
    Ok(ArrowA::from_parts(c1.source.clone(), c2.target.clone(), heap, body))
}

/// Parallel product. The heap is
/// `(b1 x h2) + ((h1 x b1') + (h1 x h2))`, the unique shape distributing to
/// `(b1 + h1) x (b1' + h2)` after the source block `b1 x b1'`.
pub fn prod_a(c1: &ArrowA, c2: &ArrowA) -> ArrowA {
    let (a1, h1) = (c1.source.clone(), c1.heap.clone());
    let (a2, h2) = (c2.source.clone(), c2.heap.clone());
    let p = BaseType::prod;
    let s = BaseType::sum;
    let heap = s(p(a1.clone(), h2.clone()), s(p(h1.clone(), a2.clone()), p(h1.clone(), h2.clone())));
    let mid1 = s(a2.clone(), h2.clone()); // b1' + h2
    let body = Comb::associ_add(
        p(a1.clone(), a2.clone()),
        p(a1.clone(), h2.clone()),
        s(p(h1.clone(), a2.clone()), p(h1.clone(), h2.clone())),
    )
    .seq(
        Comb::distribi(a1.clone(), a2.clone(), h2.clone())
            .sum_par(Comb::distribi(h1.clone(), a2.clone(), h2.clone())),
    )
    .seq(
        Comb::swap_mul(a1.clone(), mid1.clone()).sum_par(Comb::swap_mul(h1.clone(), mid1.clone())),
    )
    .seq(Comb::distribi(mid1.clone(), a1.clone(), h1.clone()))
    .seq(Comb::swap_mul(mid1, s(a1.clone(), h1)))
    .seq(c1.body.clone().prod_par(c2.body.clone()));
    ArrowA::from_parts(
        p(a1, a2),
        p(c1.target.clone(), c2.target.clone()),
        heap,
        body,
    )
}

/// Parallel choice; the midswap regroups `(inputs) + (heaps)` into the two
/// lifted parts.
pub fn sum_a(c1: &ArrowA, c2: &ArrowA) -> ArrowA {
    let heap = BaseType::sum(c1.heap.clone(), c2.heap.clone());
    let body = midswap_add(
        c1.source.clone(),
        c2.source.clone(),
        c1.heap.clone(),
        c2.heap.clone(),
    )
    .seq(c1.body.clone().sum_par(c2.body.clone()));
    ArrowA::from_parts(
        BaseType::sum(c1.source.clone(), c2.source.clone()),
        BaseType::sum(c1.target.clone(), c2.target.clone()),
        heap,
        body,
    )
}

pub fn first_a(c: &ArrowA, b: BaseType) -> ArrowA {
    prod_a(c, &arr_a(Comb::id(b)))
}

pub fn second_a(c: &ArrowA, b: BaseType) -> ArrowA {
    prod_a(&arr_a(Comb::id(b)), c)
}

pub fn left_a(c: &ArrowA, b: BaseType) -> ArrowA {
    sum_a(c, &arr_a(Comb::id(b)))
}

pub fn right_a(c: &ArrowA, b: BaseType) -> ArrowA {
    sum_a(&arr_a(Comb::id(b)), c)
}

/// Allocation `0 >-> b`: the lift of `0 + b <-> b`.
pub fn alloc_a(b: BaseType) -> ArrowA {
    let u = Comb::swap_add(BaseType::Zero, b.clone()).seq(Comb::unit_add(b));
    lift_a(u).expect("alloc body has a sum source")
}

/// Left injection `a >-> a + b`, as the lift of the identity.
pub fn inl_a(a: BaseType, b: BaseType) -> ArrowA {
    lift_a(Comb::id(BaseType::sum(a, b))).expect("sum source")
}

/// Right injection `b >-> a + b`, as the lift of the additive swap.
pub fn inr_a(a: BaseType, b: BaseType) -> ArrowA {
    lift_a(Comb::swap_add(b, a)).expect("sum source")
}

/// Classical cloning `b >-> b x b`, by structural recursion: units clone
/// trivially, products clone componentwise and regroup, sums clone the
/// branch and re-tag it on both sides.
pub fn clone_a(b: &BaseType) -> ArrowA {
    match b {
        BaseType::Zero => arr_a(Comb::distriboi(BaseType::Zero)),
        BaseType::One => arr_a(Comb::uniti_mul(BaseType::One)),
        BaseType::Prod(x, y) => {
            let cx = clone_a(x);
            let cy = clone_a(y);
            let rearrange = arr_a(midswap_mul(
                (**x).clone(),
                (**x).clone(),
                (**y).clone(),
                (**y).clone(),
            ));
            compose_a(&prod_a(&cx, &cy), &rearrange).expect("clone product composes")
        }
        BaseType::Sum(x, y) => {
            let x = (**x).clone();
            let y = (**y).clone();
            let branch = sum_a(&clone_a(&x), &clone_a(&y));
            let tag = sum_a(
                &prod_a(&inl_a(x.clone(), y.clone()), &arr_a(Comb::id(x.clone()))),
                &prod_a(&inr_a(x.clone(), y.clone()), &arr_a(Comb::id(y.clone()))),
            );
            let factor = arr_a(Comb::distribi(BaseType::sum(x.clone(), y.clone()), x, y));
            compose_a(&compose_a(&branch, &tag).expect("clone sum composes"), &factor)
                .expect("clone sum factors")
        }
    }
}

/// The canonical inhabitant `1 >-> b` of an inhabited type; left-biased on
/// sums.
pub fn inhab_a(b: &BaseType) -> Result<ArrowA> {
    match b {
        BaseType::One => Ok(arr_a(Comb::id(BaseType::One))),
        BaseType::Prod(x, y) => {
            if !b.inhabited() {
                return Err(Error::NotInhabited(b.to_string()));
            }
            let ix = inhab_a(x)?;
            let iy = inhab_a(y)?;
            compose_a(&arr_a(Comb::uniti_mul(BaseType::One)), &prod_a(&ix, &iy))
        }
        BaseType::Sum(x, y) => {
            if x.inhabited() {
                compose_a(&inhab_a(x)?, &inl_a((**x).clone(), (**y).clone()))
            } else if y.inhabited() {
                compose_a(&inhab_a(y)?, &inr_a((**x).clone(), (**y).clone()))
            } else {
                Err(Error::NotInhabited(b.to_string()))
            }
        }
        BaseType::Zero => Err(Error::NotInhabited(b.to_string())),
    }
}
