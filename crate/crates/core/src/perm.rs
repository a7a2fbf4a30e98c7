//! Concrete finite permutation groups.
//!
//! Group closure is a plain breadth-first product closure with an element
//! cap; the groups that matter here top out at `|A8| = 20160`. Composition
//! order: `compose(p, q)` applies `q` first, so that evaluating a word `a b`
//! at an assignment multiplies left-to-right the way the group-theory
//! examples expect (e.g. `(1 2 3 4 5)(2 5 4)` composes to `(1 2)(3 4)`).
//! Points are 0-based internally and 1-based in cycle notation.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// From disjoint cycles over 1-based points, e.g. `[[1,2,3],[4,5]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut seen = vec![false; degree];
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for &point in cycle {
                if point == 0 || point > degree {
                    return Err(Error::BadCycles(format!(
                        "point {point} out of range 1..={degree}"
                    )));
                }
                if seen[point - 1] {
                    return Err(Error::BadCycles(format!("point {point} repeated")));
                }
                seen[point - 1] = true;
            }
            for (i, &point) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[point - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `compose(p, q)(x) = p(q(x))`: apply `q` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                got: other.degree(),
            });
        }
        Ok(Permutation {
            images: (0..self.degree())
                .map(|x| self.apply(other.apply(x)))
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Disjoint cycle decomposition, 1-based, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let pts: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses cycle notation like `(1 2 3)(4 5)`; `()` is the identity.
/// When `degree` is `None` the largest mentioned point is used.
pub fn parse_permutation(text: &str, degree: Option<usize>) -> Result<Permutation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(Error::BadCycles(format!("expected '(' at `{rest}`")));
        };
        let Some(end) = stripped.find(')') else {
            return Err(Error::BadCycles("unclosed cycle".into()));
        };
        let body = &stripped[..end];
        let mut cycle = Vec::new();
        for token in body.split_whitespace() {
            let point: usize = token
                .parse()
                .map_err(|_| Error::BadCycles(format!("bad point `{token}`")))?;
            cycle.push(point);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = stripped[end + 1..].trim_start();
    }
    let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
    let degree = match degree {
        Some(d) => d,
        None => max_point,
    };
    Permutation::from_cycles(degree, &cycles)
}

/// Evaluates a word at an assignment of one permutation per generator,
/// multiplying left-to-right (leftmost letter applied last).
pub fn evaluate_word(word: &Word, assignment: &[Permutation]) -> Result<Permutation> {
    let degree = assignment.first().map(Permutation::degree).unwrap_or(0);
    if let Some(p) = assignment.iter().find(|p| p.degree() != degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            got: p.degree(),
        });
    }
    let mut acc = Permutation::identity(degree);
    for letter in &word.0 {
        let base = assignment.get(letter.gen).ok_or(Error::BadAssignment {
            expected: letter.gen + 1,
            got: assignment.len(),
        })?;
        let factor = if letter.inverse {
            base.inverse()
        } else {
            base.clone()
        };
        acc = acc.compose(&factor)?;
    }
    Ok(acc)
}

/// True iff every relator of the presentation evaluates to the identity
/// under the assignment (one permutation per generator, in order).
pub fn satisfies(presentation: &Presentation, assignment: &[Permutation]) -> Result<bool> {
    if assignment.len() != presentation.n_generators() {
        return Err(Error::BadAssignment {
            expected: presentation.n_generators(),
            got: assignment.len(),
        });
    }
    if let Some(first) = assignment.first() {
        if let Some(bad) = assignment.iter().find(|p| p.degree() != first.degree()) {
            return Err(Error::DegreeMismatch {
                expected: first.degree(),
                got: bad.degree(),
            });
        }
    }
    for relator in presentation.relators() {
        if !evaluate_word(relator, assignment)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A finite permutation group as its full, canonically ordered element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl FiniteGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Subgroup generated by all commutators `[g, h]` of group elements.
    pub fn commutator_subgroup(&self) -> Result<FiniteGroup> {
        let mut commutators: BTreeSet<Permutation> = BTreeSet::new();
        for g in &self.elements {
            let g_inv = g.inverse();
            for h in &self.elements {
                let c = g.compose(h)?.compose(&g_inv)?.compose(&h.inverse())?;
                commutators.insert(c);
            }
        }
        let gens: Vec<Permutation> = commutators.into_iter().collect();
        generate_capped(self.degree, &gens, self.order())
    }

    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.commutator_subgroup()?.order() == self.order())
    }
}

/// Breadth-first closure of the generators under composition.
pub fn generate(degree: usize, generators: &[Permutation]) -> Result<FiniteGroup> {
    generate_capped(degree, generators, DEFAULT_ELEMENT_CAP)
}

pub fn generate_capped(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<FiniteGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                got: g.degree(),
            });
        }
    }
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    let identity = Permutation::identity(degree);
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(current) = queue.pop_front() {
        for g in generators {
            let next = current.compose(g)?;
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(FiniteGroup {
        degree,
        elements: seen.into_iter().collect(),
    })
}

/// The alternating group `A_n` for `3 <= n <= 8`, generated by 3-cycles.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if !(3..=8).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "alternating(n) needs 3 <= n <= 8, got {n}"
        )));
    }
    let gens: Vec<Permutation> = (3..=n)
        .map(|k| Permutation::from_cycles(n, &[vec![1, 2, k]]))
        .collect::<Result<_>>()?;
    generate(n, &gens)
}
