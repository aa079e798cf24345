//! Scalar types and residue classes of rationals.

use alloc::string::{String, ToString};
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Exact fraction string: `"3"`, `"-1/2"`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}

/// `r mod m` for a positive integer modulus, landing in `[0, m)`.
pub fn rat_mod(r: &Rat, m: &Int) -> Rat {
    let num = r.numer();
    let den = r.denom();
    let md = m * den;
    Rat::new(num.mod_floor(&md), den.clone())
}

pub fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Rat>) -> Int {
    it.into_iter().fold(Int::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

macro_rules! residue_type {
    ($name:ident, $modulus:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Rat);

        impl $name {
            pub fn new(r: &Rat) -> Self {
                $name(rat_mod(r, &Int::from($modulus)))
            }

            pub fn zero() -> Self {
                $name(Rat::zero())
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }

            /// Representative in the normalized range.
            pub fn value(&self) -> &Rat {
                &self.0
            }

            pub fn numerator(&self) -> &Int {
                self.0.numer()
            }

            pub fn denominator(&self) -> &Int {
                self.0.denom()
            }

            /// Whether `r` represents this class.
            pub fn matches(&self, r: &Rat) -> bool {
                *self == $name::new(r)
            }
        }

        impl core::ops::Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name::new(&(&self.0 + &rhs.0))
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&fmt_rat(&self.0))
            }
        }
    };
}

residue_type!(QMod2, 2, "A class in `Q/2Z`, stored by its representative in `[0, 2)`.");
residue_type!(QMod1, 1, "A class in `Q/Z`, stored by its representative in `[0, 1)`.");

pub(crate) fn abs_int(v: &Int) -> Int {
    v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_mod_two_normalizes_negative_representatives() {
        assert_eq!(QMod2::new(&rat(-1, 2)).value(), &rat(3, 2));
        assert_eq!(QMod2::new(&rat(-4, 1)), QMod2::zero());
        assert_eq!(QMod2::new(&rat(10, 9)).to_string(), "10/9");
        assert_eq!(QMod1::new(&rat(-2, 3)).value(), &rat(1, 3));
    }

    #[test]
    fn fraction_strings_round_trip() {
        for s in ["0", "-7", "3/4", "-5/12"] {
            assert_eq!(fmt_rat(&parse_rat(s).unwrap()), s);
        }
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn small_primes() {
        let ps: alloc::vec::Vec<u64> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, [2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
