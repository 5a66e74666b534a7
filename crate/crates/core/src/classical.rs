//! Finite-bijection semantics for the phase-free fragment, and the
//! constructive factorization of an arbitrary finite function into an
//! injection, a bijection, and a projection.

use crate::error::{Error, Result};
use crate::syntax::Comb;
use crate::unitary::index_map;

/// A bijection on `{0, .., size-1}`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinBijection {
    pub size: usize,
    pub image: Vec<usize>,
}

impl FinBijection {
    pub fn new(image: Vec<usize>) -> FinBijection {
        let b = FinBijection { size: image.len(), image };
        assert!(b.is_permutation(), "not a permutation: {:?}", b.image);
        b
    }

    pub fn identity(size: usize) -> FinBijection {
        FinBijection { size, image: (0..size).collect() }
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.size];
        self.image.len() == self.size
            && self.image.iter().all(|&i| {
                if i >= self.size || seen[i] {
                    false
                } else {
                    seen[i] = true;
                    true
                }
            })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn inverse(&self) -> FinBijection {
        let mut inv = vec![0; self.size];
        for (j, &i) in self.image.iter().enumerate() {
            inv[i] = j;
        }
        FinBijection { size: self.size, image: inv }
    }
}

/// An arbitrary function between finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunction {
    pub domain: usize,
    pub codomain: usize,
    pub image: Vec<usize>,
}

impl FinFunction {
    pub fn new(domain: usize, codomain: usize, image: Vec<usize>) -> Result<FinFunction> {
        if domain >= 1 && codomain == 0 {
            return Err(Error::EmptyCodomain);
        }
        assert_eq!(image.len(), domain);
        assert!(image.iter().all(|&y| y < codomain), "image out of range");
        Ok(FinFunction { domain, codomain, image })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }
}

/// Evaluates a phase-free, hadamard-free combinator to the bijection it
/// denotes, using the same basis indexing as the unitary backend.
pub fn eval_bij(c: &Comb) -> Result<FinBijection> {
    match c {
        Comb::Prim(p, params) => Ok(FinBijection::new(index_map(*p, params))),
        Comb::Seq(a, b) => {
            let fa = eval_bij(a)?;
            let fb = eval_bij(b)?;
            Ok(FinBijection::new(fa.image.iter().map(|&i| fb.image[i]).collect()))
        }
        Comb::SumPar(a, b) => {
            let fa = eval_bij(a)?;
            let fb = eval_bij(b)?;
            let mut image = fa.image.clone();
            image.extend(fb.image.iter().map(|&i| fa.size + i));
            Ok(FinBijection::new(image))
        }
        Comb::ProdPar(a, b) => {
            let fa = eval_bij(a)?;
            let fb = eval_bij(b)?;
            let mut image = Vec::with_capacity(fa.size * fb.size);
            for ia in 0..fa.size {
                for ib in 0..fb.size {
                    image.push(fa.image[ia] * fb.size + fb.image[ib]);
                }
            }
            Ok(FinBijection::new(image))
        }
        Comb::Phase(_) | Comb::Hadamard => Err(Error::NotClassical),
    }
}

/// Result of factoring a finite function `f : domain -> codomain` through a
/// bijection.
///
/// The bijection `g` acts on `domain * codomain` points. The embedding takes
/// `x` to index `x`; the projection takes an output index `q`, laid out as
/// `codomain x domain` lexicographically, to `q / garbage_size`. For every
/// `x < domain`, `project(g(embed(x))) = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub heap_size: usize,
    pub garbage_size: usize,
    pub bijection: FinBijection,
}

impl Factorization {
    /// Recovers the factored function pointwise.
    pub fn recompose(&self, domain: usize, codomain: usize) -> FinFunction {
        let image = (0..domain)
            .map(|x| self.bijection.apply(x) / self.garbage_size.max(1))
            .collect();
        FinFunction::new(domain, codomain, image).expect("factorization is well-formed")
    }
}

/// Factors `f` as injection, bijection, projection.
///
/// Points of the extended input `domain + heap` are identified with pairs
/// `(x, y)` of `domain x codomain` (with `x` embedding as `(x, 0)`), and the
/// bijection is the cyclic shift `(x, y) -> ((y + f(x)) mod codomain, x)`
/// into the `codomain x domain` output layout.
pub fn factor_finfun(f: &FinFunction) -> Result<Factorization> {
    let n = f.domain;
    let m = f.codomain;
    if n >= 1 && m == 0 {
        return Err(Error::EmptyCodomain);
    }
    let total = n * m;
    let mut image = vec![0usize; total];
    for i in 0..total {
        let (x, y) = if i < n {
            (i, 0)
        } else {
            // heap point k enumerates the pairs with y > 0
            let k = i - n;
            (k / (m - 1), k % (m - 1) + 1)
        };
        image[i] = ((y + f.apply(x)) % m) * n + x;
    }
    Ok(Factorization {
        heap_size: total - n,
        garbage_size: n,
        bijection: FinBijection { size: total, image },
    })
}
