//! Monomials in `K[t_0, ..., t_r]`, all variables of degree 1, ordered by
//! degree reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0
                    .iter()
                    .zip(&other.0)
                    .map(|(a, b)| a - b)
                    .collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when only variable `i` occurs (a pure power, including 1).
    pub fn is_pure_power_of(&self, i: usize) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(j, &e)| j == i || e == 0)
    }

    /// All monomials of the given total degree, in descending order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u16; nvars];
        fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u16>, pos: usize, left: u32) {
            if pos + 1 == current.len() {
                current[pos] = left as u16;
                out.push(Monomial(current.clone()));
                return;
            }
            for e in (0..=left).rev() {
                current[pos] = e as u16;
                rec(out, current, pos + 1, left - e);
            }
        }
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(&mut out, &mut current, 0, degree);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

/// Degrevlex: higher total degree wins; on ties the monomial whose last
/// differing exponent is smaller wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let names: &[&str] = match self.nvars() {
            1 => &["x"],
            2 => &["x", "y"],
            3 => &["x", "y", "z"],
            _ => &[],
        };
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if names.is_empty() {
                write!(f, "t{i}")?;
            } else {
                write!(f, "{}", names[i])?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mon(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_two_vars() {
        // x > y, x^2 > xy > y^2.
        assert!(mon(&[1, 0]) > mon(&[0, 1]));
        assert!(mon(&[2, 0]) > mon(&[1, 1]));
        assert!(mon(&[1, 1]) > mon(&[0, 2]));
        assert!(mon(&[0, 2]) > mon(&[1, 0]));
    }

    #[test]
    fn degrevlex_three_vars_classic() {
        // In K[x,y,z]: x*z < y^2 under degrevlex.
        assert!(mon(&[1, 0, 1]) < mon(&[0, 2, 0]));
        // x^2 > xy > y^2 > xz > yz > z^2.
        let deg2 = Monomial::all_of_degree(3, 2);
        let expected: Vec<Monomial> = [
            [2, 0, 0],
            [1, 1, 0],
            [0, 2, 0],
            [1, 0, 1],
            [0, 1, 1],
            [0, 0, 2],
        ]
        .iter()
        .map(|e| mon(e))
        .collect();
        assert_eq!(deg2, expected);
    }

    #[test]
    fn division_and_lcm() {
        let xy = mon(&[1, 1]);
        let x = mon(&[1, 0]);
        assert!(x.divides(&xy));
        assert_eq!(xy.try_div(&x), Some(mon(&[0, 1])));
        assert_eq!(xy.try_div(&mon(&[2, 0])), None);
        assert_eq!(x.lcm(&mon(&[0, 1])), xy);
        assert!(x.is_coprime_with(&mon(&[0, 1])));
        assert!(!xy.is_coprime_with(&x));
    }

    #[test]
    fn counts_of_degree() {
        assert_eq!(Monomial::all_of_degree(2, 5).len(), 6);
        assert_eq!(Monomial::all_of_degree(3, 4).len(), 15);
        assert_eq!(Monomial::all_of_degree(2, 0).len(), 1);
    }

    #[test]
    fn pure_powers() {
        assert!(mon(&[3, 0]).is_pure_power_of(0));
        assert!(!mon(&[3, 1]).is_pure_power_of(0));
        assert!(mon(&[0, 0]).is_pure_power_of(1));
    }
}
