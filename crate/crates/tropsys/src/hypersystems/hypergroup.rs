//! Finite hypergroups with bitmask-valued addition, and their power-set systems.

use std::collections::HashMap;

use crate::core::{Family, SystemHandle};
use crate::error::{AxiomViolation, Error, Result};
use crate::instances::finite::{load_finite_system, FiniteSurpass, FiniteTable};

/// Hyperaddition on a carrier of at most 128 elements; `add[a][b]` is a bitmask.
#[derive(Clone, Debug)]
pub struct FiniteHypergroup {
    pub name: String,
    pub carrier: Vec<String>,
    pub zero: usize,
    pub neg: Vec<usize>,
    pub add: Vec<Vec<u128>>,
    /// Single-valued multiplication, if any.
    pub mul: Option<Vec<Vec<usize>>>,
    pub one: Option<usize>,
    /// Skip the unique-hypernegative check (non-canonical hypergroups).
    pub non_canonical: bool,
}

/// How products of subsets are formed in the power-set system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    /// Expand the left factor into tangibles and add their actions.
    Generated,
    /// Elementwise products; fails when a product leaves the carrier.
    Pointwise,
}

pub fn bits(m: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |i| m >> i & 1 == 1)
}

impl FiniteHypergroup {
    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn set_add(&self, x: u128, y: u128) -> u128 {
        let mut out = 0;
        for a in bits(x) {
            for b in bits(y) {
                out |= self.add[a][b];
            }
        }
        out
    }

    pub fn set_neg(&self, x: u128) -> u128 {
        bits(x).fold(0, |acc, a| acc | 1u128 << self.neg[a])
    }

    pub fn fmt_set(&self, x: u128) -> String {
        let v: Vec<&str> = bits(x).map(|i| self.carrier[i].as_str()).collect();
        if v.len() == 1 {
            v[0].to_string()
        } else {
            format!("{{{}}}", v.join(","))
        }
    }

    /// Commutativity, associativity, neutral zero, hypernegatives and reversibility.
    pub fn verify(&self) -> std::result::Result<(), AxiomViolation> {
        let n = self.size();
        let nm = |i: usize| self.carrier[i].clone();
        let fail = |axiom: &str, w: String| AxiomViolation::Hypergroup { axiom: axiom.into(), witness: w };
        if n == 0 || n > 128 {
            return Err(fail("carrier size", n.to_string()));
        }
        if self.add.len() != n || self.add.iter().any(|r| r.len() != n) || self.neg.len() != n {
            return Err(AxiomViolation::NotTotal { table: "hyperaddition".into(), row: "-".into(), col: "-".into() });
        }
        let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        for a in 0..n {
            for b in 0..n {
                let s = self.add[a][b];
                if s == 0 || s & !full != 0 {
                    return Err(fail("nonempty sums", format!("{} {}", nm(a), nm(b))));
                }
                if s != self.add[b][a] {
                    return Err(AxiomViolation::AddNotCommutative(nm(a), nm(b)));
                }
            }
        }
        for a in 0..n {
            if self.add[self.zero][a] != 1u128 << a {
                return Err(AxiomViolation::ZeroNotNeutral(nm(a)));
            }
            if self.neg[self.neg[a]] != a {
                return Err(AxiomViolation::NegNotInvolution(nm(a)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = self.set_add(self.add[a][b], 1 << c);
                    let r = self.set_add(1 << a, self.add[b][c]);
                    if l != r {
                        return Err(AxiomViolation::AddNotAssociative(nm(a), nm(b), nm(c)));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let has_zero = self.add[a][b] >> self.zero & 1 == 1;
                if !self.non_canonical && has_zero != (b == self.neg[a]) {
                    return Err(fail("unique hypernegative", format!("{} {}", nm(a), nm(b))));
                }
                if self.neg[a] == b && !has_zero {
                    return Err(fail("hypernegative", format!("{} {}", nm(a), nm(b))));
                }
                for c in bits(self.add[a][b]) {
                    // c ∈ a ⊞ b implies b ∈ c ⊞ (-a)
                    if self.add[c][self.neg[a]] >> b & 1 == 0 {
                        return Err(fail("reversibility", format!("{} {} {}", nm(a), nm(b), nm(c))));
                    }
                }
            }
        }
        if let Some(m) = &self.mul {
            if m.len() != n || m.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
                return Err(AxiomViolation::NotTotal { table: "mul".into(), row: "-".into(), col: "-".into() });
            }
            for a in 0..n {
                if m[self.zero][a] != self.zero || m[a][self.zero] != self.zero {
                    return Err(AxiomViolation::ZeroNotAbsorbing(nm(a)));
                }
                for b in 0..n {
                    for c in 0..n {
                        if m[m[a][b]][c] != m[a][m[b][c]] {
                            return Err(AxiomViolation::MulNotAssociative(nm(a), nm(b), nm(c)));
                        }
                        let l = bits(self.add[b][c]).fold(0u128, |acc, x| acc | 1 << m[a][x]);
                        let r = self.add[m[a][b]][m[a][c]];
                        if l != r {
                            return Err(AxiomViolation::NotDistributive(nm(a), nm(b), nm(c)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `a ∈ a ⊞ b` whenever `a ⊞ b` has more than one element.
    pub fn property_p(&self) -> std::result::Result<(), (usize, usize)> {
        for a in 0..self.size() {
            for b in 0..self.size() {
                let s = self.add[a][b];
                if s.count_ones() > 1 && s >> a & 1 == 0 {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }
}

/// Closure of the singletons under set addition, as a system ordered by inclusion.
pub fn powerset_system(h: &FiniteHypergroup) -> Result<SystemHandle> {
    powerset_system_with(h, ProductMode::Generated)
}

pub fn powerset_system_with(h: &FiniteHypergroup, mode: ProductMode) -> Result<SystemHandle> {
    h.verify()?;
    let n = h.size();
    let mut sets: Vec<u128> = (0..n).map(|i| 1u128 << i).collect();
    let mut index: HashMap<u128, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut i = 0;
    while i < sets.len() {
        for j in 0..=i {
            let s = h.set_add(sets[i], sets[j]);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(s) {
                e.insert(sets.len());
                sets.push(s);
            }
        }
        i += 1;
    }
    let m = sets.len();
    let names: Vec<String> = sets.iter().map(|&s| h.fmt_set(s)).collect();
    let mut t = FiniteTable::new(&format!("P({})", h.name), names);
    t.family = Family::Hyper;
    for a in 0..m {
        for b in 0..m {
            t.add[a][b] = index[&h.set_add(sets[a], sets[b])];
        }
        t.neg[a] =
            *index.get(&h.set_neg(sets[a])).ok_or_else(|| Error::Unsupported("negation leaves closure".into()))?;
    }
    t.tangibles = (0..n).filter(|&i| i != h.zero).collect();
    t.zero = Some(h.zero);
    t.one = h.one;
    if let Some(mt) = &h.mul {
        let act = |a: usize, s: u128| bits(s).fold(0u128, |acc, x| acc | 1 << mt[a][x]);
        let mut mul = vec![vec![0; m]; m];
        // decompositions: each closure element is a sum of singletons
        let decomp = decompositions(h, &sets, &index);
        for x in 0..m {
            for y in 0..m {
                let prod = match mode {
                    ProductMode::Pointwise => {
                        let mut p = 0u128;
                        for a in bits(sets[x]) {
                            for b in bits(sets[y]) {
                                p |= 1 << mt[a][b];
                            }
                        }
                        p
                    }
                    ProductMode::Generated => {
                        if sets[x] == 1 << h.zero || sets[y] == 1 << h.zero {
                            1 << h.zero
                        } else {
                            decomp[x].iter().map(|&a| act(a, sets[y])).reduce(|u, v| h.set_add(u, v)).unwrap()
                        }
                    }
                };
                mul[x][y] = *index
                    .get(&prod)
                    .ok_or_else(|| Error::UndefinedProduct(t.carrier[x].clone(), t.carrier[y].clone()))?;
            }
        }
        t.mul = Some(mul);
    }
    t.surpass = FiniteSurpass::Subset { sets: sets.clone(), zero_bit: Some(h.zero) };
    load_finite_system(t)
}

fn decompositions(h: &FiniteHypergroup, sets: &[u128], index: &HashMap<u128, usize>) -> Vec<Vec<usize>> {
    let mut dec: Vec<Option<Vec<usize>>> = vec![None; sets.len()];
    let tang: Vec<usize> = (0..h.size()).filter(|&i| i != h.zero).collect();
    let mut queue = std::collections::VecDeque::new();
    dec[h.zero] = Some(vec![]);
    for &a in &tang {
        dec[a] = Some(vec![a]);
        queue.push_back(a);
    }
    while let Some(x) = queue.pop_front() {
        for &a in &tang {
            let s = index[&h.set_add(sets[x], 1 << a)];
            if dec[s].is_none() {
                let mut d = dec[x].clone().unwrap();
                d.push(a);
                dec[s] = Some(d);
                queue.push_back(s);
            }
        }
    }
    dec.into_iter().map(|d| d.unwrap_or_default()).collect()
}

/// {0, 1} with 1 ⊞ 1 = {0, 1}.
pub fn krasner() -> FiniteHypergroup {
    FiniteHypergroup {
        name: "krasner".into(),
        carrier: vec!["0".into(), "1".into()],
        zero: 0,
        neg: vec![0, 1],
        add: vec![vec![0b01, 0b10], vec![0b10, 0b11]],
        mul: Some(vec![vec![0, 0], vec![0, 1]]),
        one: Some(1),
        non_canonical: false,
    }
}

/// {0, 1, -1} with 1 ⊞ -1 = everything.
pub fn sign_hyperfield() -> FiniteHypergroup {
    FiniteHypergroup {
        name: "signs".into(),
        carrier: vec!["0".into(), "1".into(), "-1".into()],
        zero: 0,
        neg: vec![0, 2, 1],
        add: vec![vec![0b001, 0b010, 0b100], vec![0b010, 0b010, 0b111], vec![0b100, 0b111, 0b100]],
        mul: Some(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]]),
        one: Some(1),
        non_canonical: false,
    }
}

/// Tropical hyperaddition on a chain 0 < g1 < … < gk: a ⊞ a = {c ≤ a}, otherwise the maximum.
pub fn tropical_chain(k: usize) -> FiniteHypergroup {
    let n = k + 1;
    let mut carrier = vec!["0".to_string()];
    carrier.extend((1..=k).map(|i| format!("g{i}")));
    let add = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if a == b {
                        if a == 0 {
                            1
                        } else {
                            (1u128 << (a + 1)) - 1
                        }
                    } else {
                        1u128 << a.max(b)
                    }
                })
                .collect()
        })
        .collect();
    FiniteHypergroup {
        name: format!("tropical-chain-{k}"),
        carrier,
        zero: 0,
        neg: (0..n).collect(),
        add,
        mul: None,
        one: None,
        non_canonical: false,
    }
}
