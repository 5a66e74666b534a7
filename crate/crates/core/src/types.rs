//! Base types of the combinator languages: `0`, `1`, sums and products.

use std::fmt;

/// A first-order type built from the empty type, the unit type, sums and
/// products. The same grammar is shared by all three languages.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseType {
    Zero,
    One,
    Sum(Box<BaseType>, Box<BaseType>),
    Prod(Box<BaseType>, Box<BaseType>),
}

impl BaseType {
    pub fn sum(a: BaseType, b: BaseType) -> BaseType {
        BaseType::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: BaseType, b: BaseType) -> BaseType {
        BaseType::Prod(Box::new(a), Box::new(b))
    }

    /// The qubit type `1+1`.
    pub fn qbit() -> BaseType {
        BaseType::sum(BaseType::One, BaseType::One)
    }

    /// Number of classical states; the dimension of the denotation.
    pub fn dim(&self) -> usize {
        match self {
            BaseType::Zero => 0,
            BaseType::One => 1,
            BaseType::Sum(a, b) => a.dim() + b.dim(),
            BaseType::Prod(a, b) => a.dim() * b.dim(),
        }
    }

    /// Inhabitation judgment: `1` is inhabited, a product is inhabited when
    /// both factors are, a sum when either summand is. Coincides with
    /// `dim() >= 1`.
    pub fn inhabited(&self) -> bool {
        match self {
            BaseType::Zero => false,
            BaseType::One => true,
            BaseType::Sum(a, b) => a.inhabited() || b.inhabited(),
            BaseType::Prod(a, b) => a.inhabited() && b.inhabited(),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            BaseType::Zero => write!(f, "0"),
            BaseType::One => write!(f, "1"),
            BaseType::Sum(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 0)?;
                write!(f, "+")?;
                // left-associated: parenthesize a sum on the right
                b.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            BaseType::Prod(a, b) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                write!(f, "*")?;
                b.fmt_prec(f, 2)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for BaseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// The type of a reversible combinator, written `b1 <-> b2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombType {
    pub source: BaseType,
    pub target: BaseType,
}

impl CombType {
    pub fn new(source: BaseType, target: BaseType) -> CombType {
        CombType { source, target }
    }
}

impl fmt::Display for CombType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <-> {}", self.source, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BaseType::*;

    #[test]
    fn dims() {
        assert_eq!(Zero.dim(), 0);
        assert_eq!(One.dim(), 1);
        assert_eq!(BaseType::qbit().dim(), 2);
        assert_eq!(BaseType::prod(BaseType::qbit(), BaseType::qbit()).dim(), 4);
        assert_eq!(BaseType::prod(Zero, BaseType::qbit()).dim(), 0);
        assert_eq!(BaseType::sum(Zero, One).dim(), 1);
    }

    #[test]
    fn inhabitation() {
        assert!(One.inhabited());
        assert!(!Zero.inhabited());
        assert!(BaseType::sum(Zero, One).inhabited());
        assert!(BaseType::sum(One, Zero).inhabited());
        assert!(!BaseType::prod(Zero, One).inhabited());
        // inhabited iff dim >= 1, spot-checked
        let t = BaseType::prod(BaseType::sum(Zero, Zero), One);
        assert_eq!(t.inhabited(), t.dim() >= 1);
    }

    #[test]
    fn display_parenthesization() {
        let t = BaseType::sum(BaseType::sum(One, One), One);
        assert_eq!(t.to_string(), "1+1+1");
        let u = BaseType::sum(One, BaseType::sum(One, One));
        assert_eq!(u.to_string(), "1+(1+1)");
        let v = BaseType::prod(BaseType::sum(One, One), Zero);
        assert_eq!(v.to_string(), "(1+1)*0");
        let w = BaseType::prod(One, BaseType::prod(One, One));
        assert_eq!(w.to_string(), "1*(1*1)");
    }
}
