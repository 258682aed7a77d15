use std::cmp::Ordering;

/// A power product `x_{i1}^{e1} * ... * x_{ik}^{ek}`.
///
/// Stored sparsely as `(variable, exponent)` pairs sorted by variable with
/// every exponent nonzero, so the empty monomial is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    powers: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: usize) -> Self {
        Monomial { powers: vec![(index, 1)] }
    }

    /// Builds from arbitrary pairs; zero exponents are dropped and repeats summed.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut powers: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        powers.sort_unstable_by_key(|&(v, _)| v);
        powers.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Monomial { powers }
    }

    /// Builds from a dense exponent vector.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        Self::from_pairs(exponents.iter().copied().enumerate())
    }

    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.powers.binary_search_by_key(&var, |&(v, _)| v).map(|i| self.powers[i].1).unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    /// Largest variable index plus one, or 0 for the unit monomial.
    pub fn span(&self) -> usize {
        self.powers.last().map_or(0, |&(v, _)| v + 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, b) = (self.powers[i], other.powers[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.powers[i..]);
        out.extend_from_slice(&other.powers[j..]);
        Monomial { powers: out }
    }

    /// `∂/∂x_var`, as `(multiplier, monomial)`; `None` when the result is zero.
    pub fn derivative(&self, var: usize) -> Option<(u32, Monomial)> {
        let pos = self.powers.binary_search_by_key(&var, |&(v, _)| v).ok()?;
        let e = self.powers[pos].1;
        let mut powers = self.powers.clone();
        if e == 1 {
            powers.remove(pos);
        } else {
            powers[pos].1 = e - 1;
        }
        Some((e, Monomial { powers }))
    }

    pub(crate) fn map_vars(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_pairs(self.powers.iter().map(|&(v, e)| (f(v), e)))
    }
}

/// Lexicographic on dense exponent vectors, variable 0 most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.powers, &other.powers);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the side with the smaller variable has a positive
                        // exponent where the other has zero
                        return vb.cmp(&va);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
