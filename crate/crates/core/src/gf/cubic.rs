//! GF(q^3) as `GF(q)[x]/(f)` for a monic irreducible cubic `f`, with
//! elements stored as coordinate triples over GF(q). Used to build Singer
//! difference sets, where the triples double as homogeneous coordinates.

use super::arith::prime_factors;
use super::field::{Field, FieldElement};

pub type Triple = [FieldElement; 3];

#[derive(Clone, Debug)]
pub struct CubicExtension<'a> {
    base: &'a Field,
    /// `c0, c1, c2` of `x^3 + c2 x^2 + c1 x + c0`.
    low: [FieldElement; 3],
    group_primes: Vec<u64>,
}

impl<'a> CubicExtension<'a> {
    /// Uses the first rootless monic cubic, ordered by `c0 + c1 q + c2 q^2`.
    pub fn new(base: &'a Field) -> Self {
        let q = base.order();
        let low = (0..q * q * q)
            .map(|i| [base.elem(i % q), base.elem(i / q % q), base.elem(i / (q * q))])
            .find(|c| base.elements().all(|x| !Self::eval(base, c, x).is_zero()))
            .expect("irreducible cubics exist over every finite field");
        let order = q * q * q;
        CubicExtension { base, low, group_primes: prime_factors(order - 1) }
    }

    fn eval(f: &Field, c: &[FieldElement; 3], x: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ONE;
        for &ci in c.iter().rev() {
            acc = f.add(f.mul(acc, x), ci);
        }
        acc
    }

    pub fn base(&self) -> &Field {
        self.base
    }

    pub fn modulus_low(&self) -> [FieldElement; 3] {
        self.low
    }

    pub fn order(&self) -> u64 {
        self.base.order().pow(3)
    }

    pub fn one() -> Triple {
        [FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO]
    }

    pub fn from_index(&self, i: u64) -> Triple {
        let q = self.base.order();
        [self.base.elem(i % q), self.base.elem(i / q % q), self.base.elem(i / (q * q))]
    }

    pub fn mul(&self, x: &Triple, y: &Triple) -> Triple {
        let f = self.base;
        let mut prod = [FieldElement::ZERO; 5];
        for i in 0..3 {
            for j in 0..3 {
                prod[i + j] = f.add(prod[i + j], f.mul(x[i], y[j]));
            }
        }
        // x^3 = -(c2 x^2 + c1 x + c0)
        for d in (3..5).rev() {
            let c = prod[d];
            if c.is_zero() {
                continue;
            }
            prod[d] = FieldElement::ZERO;
            for k in 0..3 {
                prod[d - 3 + k] = f.sub(prod[d - 3 + k], f.mul(c, self.low[k]));
            }
        }
        [prod[0], prod[1], prod[2]]
    }

    pub fn pow(&self, x: &Triple, mut e: u64) -> Triple {
        let mut acc = Self::one();
        let mut b = *x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    pub fn is_primitive(&self, x: &Triple) -> bool {
        if x.iter().all(|c| c.is_zero()) {
            return false;
        }
        let n = self.order() - 1;
        self.group_primes.iter().all(|&r| self.pow(x, n / r) != Self::one())
    }

    /// First primitive element by index.
    pub fn first_primitive(&self) -> Triple {
        (1..self.order()).map(|i| self.from_index(i)).find(|x| self.is_primitive(x)).expect("the multiplicative group is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_over_gf2_uses_x3_plus_x_plus_1() {
        let f = Field::with_order(2).unwrap();
        let e = CubicExtension::new(&f);
        let low: Vec<u64> = e.modulus_low().iter().map(|c| c.enc()).collect();
        assert_eq!(low, vec![1, 1, 0]);
        let g = e.first_primitive();
        assert_eq!(g, e.from_index(2));
        // g^3 = g + 1
        assert_eq!(e.pow(&g, 3), e.from_index(3));
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_full_order() {
        for q in [2u64, 3, 4, 5] {
            let f = Field::with_order(q).unwrap();
            let e = CubicExtension::new(&f);
            let g = e.first_primitive();
            let n = e.order() - 1;
            let mut seen = std::collections::HashSet::new();
            let mut cur = CubicExtension::one();
            for _ in 0..n {
                assert!(seen.insert(cur));
                cur = e.mul(&cur, &g);
            }
            assert_eq!(cur, CubicExtension::one());
        }
    }
}
