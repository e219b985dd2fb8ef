//! The rational cohomology ring of Gr(2,4) in the Schubert basis.
//!
//! Products are truncated above degree 4 (the top class is `σ22`), so every
//! value of [`CohClass`] lives in the finite-dimensional ring and all
//! positive-degree classes are nilpotent.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Top degree of the ring (complex dimension of the Grassmannian).
pub const TOP_DEGREE: usize = 4;

/// Schubert classes. Degree is half the cohomological degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchubertBasis {
    One,
    S1,
    S11,
    S2,
    S21,
    S22,
}

impl SchubertBasis {
    pub const ALL: [SchubertBasis; 6] = [
        SchubertBasis::One,
        SchubertBasis::S1,
        SchubertBasis::S11,
        SchubertBasis::S2,
        SchubertBasis::S21,
        SchubertBasis::S22,
    ];

    pub fn degree(self) -> usize {
        match self {
            SchubertBasis::One => 0,
            SchubertBasis::S1 => 1,
            SchubertBasis::S11 | SchubertBasis::S2 => 2,
            SchubertBasis::S21 => 3,
            SchubertBasis::S22 => 4,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            SchubertBasis::One => "1",
            SchubertBasis::S1 => "σ1",
            SchubertBasis::S11 => "σ11",
            SchubertBasis::S2 => "σ2",
            SchubertBasis::S21 => "σ21",
            SchubertBasis::S22 => "σ22",
        }
    }

    pub fn of_degree(j: usize) -> impl Iterator<Item = SchubertBasis> {
        Self::ALL.into_iter().filter(move |b| b.degree() == j)
    }
}

impl fmt::Display for SchubertBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Structure constants `b_i · b_j` for all pairs of basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    products: Vec<CohClass>,
}

impl MultiplicationTable {
    /// The Schubert calculus table of Gr(2,4).
    pub fn standard() -> &'static MultiplicationTable {
        static TABLE: OnceLock<MultiplicationTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            use SchubertBasis::*;
            let mut table = MultiplicationTable {
                products: vec![CohClass::zero(); 36],
            };
            for b in SchubertBasis::ALL {
                table.set(One, b, CohClass::basis(b));
            }
            table.set(S1, S1, CohClass::basis(S11) + CohClass::basis(S2));
            table.set(S1, S11, CohClass::basis(S21));
            table.set(S1, S2, CohClass::basis(S21));
            table.set(S1, S21, CohClass::basis(S22));
            table.set(S11, S11, CohClass::basis(S22));
            table.set(S2, S2, CohClass::basis(S22));
            table.set(S11, S2, CohClass::zero());
            // every remaining pair has total degree above 4 and stays zero
            table
        })
    }

    /// Returns a copy with `a·b = b·a = value`. Used to build deliberately
    /// broken tables for mutation checks.
    pub fn with_product(&self, a: SchubertBasis, b: SchubertBasis, value: CohClass) -> Self {
        let mut table = self.clone();
        table.set(a, b, value);
        table
    }

    fn set(&mut self, a: SchubertBasis, b: SchubertBasis, value: CohClass) {
        self.products[a.index() * 6 + b.index()] = value.clone();
        self.products[b.index() * 6 + a.index()] = value;
    }

    pub fn product(&self, a: SchubertBasis, b: SchubertBasis) -> &CohClass {
        &self.products[a.index() * 6 + b.index()]
    }
}

/// An element of H*(Gr(2,4); Q).
///
/// Stored sparsely: a basis element with zero coefficient is never present,
/// so derived equality is exact coefficient-wise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CohClass {
    coeffs: BTreeMap<SchubertBasis, Scalar>,
}

impl CohClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(SchubertBasis::One)
    }

    pub fn basis(b: SchubertBasis) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn term(b: SchubertBasis, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    /// A multiple of the unit class.
    pub fn scalar(c: Scalar) -> Self {
        Self::term(SchubertBasis::One, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (SchubertBasis, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    fn add_term(&mut self, b: SchubertBasis, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(b).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, b: SchubertBasis) -> Scalar {
        self.coeffs.get(&b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (SchubertBasis, &Scalar)> {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    /// Projection onto the degree-`j` basis elements.
    pub fn degree_component(&self, j: usize) -> Result<CohClass> {
        if j > TOP_DEGREE {
            return Err(Error::DegreeOutOfRange(j));
        }
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(b, _)| b.degree() == j)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        })
    }

    pub fn is_homogeneous_of(&self, j: usize) -> bool {
        self.coeffs.keys().all(|b| b.degree() == j)
    }

    pub fn scale(&self, a: &Scalar) -> CohClass {
        if a.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, c * a)).collect(),
        }
    }

    pub fn mul_with(&self, other: &CohClass, table: &MultiplicationTable) -> CohClass {
        let mut out = CohClass::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let prod = table.product(*a, *b);
                if prod.is_zero() {
                    continue;
                }
                let c = ca * cb;
                for (e, ce) in &prod.coeffs {
                    out.add_term(*e, ce * &c);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> CohClass {
        (0..n).fold(CohClass::one(), |acc, _| &acc * self)
    }

    /// `exp(x) = Σ xⁿ/n!`, a finite sum because `x` must have zero constant
    /// term and positive-degree classes vanish above degree 4.
    pub fn exp_nilpotent(&self) -> Result<CohClass> {
        let c0 = self.coefficient(SchubertBasis::One);
        if !c0.is_zero() {
            return Err(Error::NotNilpotent(c0.to_string()));
        }
        let mut out = CohClass::one();
        let mut power = CohClass::one();
        for n in 1..=TOP_DEGREE as u64 {
            power = &power * self;
            out += power.scale(&scalar::from_big(scalar::factorial(n)).recip());
        }
        Ok(out)
    }
}

impl From<SchubertBasis> for CohClass {
    fn from(b: SchubertBasis) -> Self {
        CohClass::basis(b)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match b {
                SchubertBasis::One => write!(f, "{abs}")?,
                _ if abs.is_one() => write!(f, "{b}")?,
                _ => write!(f, "{abs} {b}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&CohClass> for CohClass {
    fn add_assign(&mut self, rhs: &CohClass) {
        for (b, c) in &rhs.coeffs {
            self.add_term(*b, c.clone());
        }
    }
}

impl AddAssign for CohClass {
    fn add_assign(&mut self, rhs: CohClass) {
        *self += &rhs;
    }
}

impl SubAssign<&CohClass> for CohClass {
    fn sub_assign(&mut self, rhs: &CohClass) {
        for (b, c) in &rhs.coeffs {
            self.add_term(*b, -c);
        }
    }
}

impl SubAssign for CohClass {
    fn sub_assign(&mut self, rhs: CohClass) {
        *self -= &rhs;
    }
}

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        CohClass {
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Neg for CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CohClass> for &CohClass {
            type Output = CohClass;
            fn $method(self, rhs: &CohClass) -> CohClass {
                let f: fn(&CohClass, &CohClass) -> CohClass = $body;
                f(self, rhs)
            }
        }
        impl $trait<CohClass> for CohClass {
            type Output = CohClass;
            fn $method(self, rhs: CohClass) -> CohClass {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CohClass> for CohClass {
            type Output = CohClass;
            fn $method(self, rhs: &CohClass) -> CohClass {
                (&self).$method(rhs)
            }
        }
        impl $trait<CohClass> for &CohClass {
            type Output = CohClass;
            fn $method(self, rhs: CohClass) -> CohClass {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| {
    let mut out = a.clone();
    out += b;
    out
});
forward_binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    out -= b;
    out
});
forward_binop!(Mul, mul, |a, b| a.mul_with(b, MultiplicationTable::standard()));
