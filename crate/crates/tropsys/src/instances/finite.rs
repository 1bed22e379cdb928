//! Table-driven finite systems.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::core::{axioms, Family, Height, SurpassKind, SystemHandle, SystemImpl, TripleLevel, Val};
use crate::error::{AxiomViolation, Error, Result};

/// How `⪯` is decided on a finite carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteSurpass {
    Circ,
    /// Each element is a subset (bitmask over a base set); `zero_bit` marks the base zero.
    Subset {
        sets: Vec<u128>,
        zero_bit: Option<usize>,
    },
    Equality,
}

/// Raw description of a finite system.
#[derive(Clone, Debug)]
pub struct FiniteTable {
    pub name: String,
    pub carrier: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Option<Vec<Vec<usize>>>,
    pub neg: Vec<usize>,
    pub tangibles: Vec<usize>,
    pub zero: Option<usize>,
    pub one: Option<usize>,
    pub level: TripleLevel,
    pub surpass: FiniteSurpass,
    pub family: Family,
}

impl FiniteTable {
    pub fn new(name: &str, carrier: Vec<String>) -> Self {
        let n = carrier.len();
        FiniteTable {
            name: name.to_string(),
            carrier,
            add: vec![vec![0; n]; n],
            mul: None,
            neg: (0..n).collect(),
            tangibles: Vec::new(),
            zero: None,
            one: None,
            level: TripleLevel::Triple,
            surpass: FiniteSurpass::Circ,
            family: Family::Finite,
        }
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        let key = normalize(name);
        self.carrier.iter().position(|c| normalize(c) == key)
    }
}

fn normalize(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

pub struct FiniteSystem {
    t: FiniteTable,
    tan: Vec<bool>,
    qz: Vec<bool>,
    /// surp[a][b] holds when b ⪯ a.
    surp: Vec<Vec<bool>>,
    heights: Vec<Height>,
    decomp: Vec<Option<Vec<usize>>>,
    names: HashMap<String, usize>,
}

impl FiniteSystem {
    pub fn table(&self) -> &FiniteTable {
        &self.t
    }

    pub fn size(&self) -> usize {
        self.t.carrier.len()
    }

    fn idx(v: &Val) -> usize {
        match v {
            Val::Idx(i) => *i as usize,
            other => panic!("finite system received foreign value {other:?}"),
        }
    }
}

/// Verify a table and wrap it in a handle.
pub fn load_finite_system(table: FiniteTable) -> Result<SystemHandle> {
    verify_table(&table)?;
    let sys = build(table);
    let h = SystemHandle::new(Arc::new(sys));
    axioms::verify_system(&h, &h.probe())?;
    Ok(h)
}

/// Build without verification (used by tests probing deliberately broken tables).
pub fn build_unchecked(table: FiniteTable) -> SystemHandle {
    SystemHandle::new(Arc::new(build(table)))
}

fn build(t: FiniteTable) -> FiniteSystem {
    let n = t.carrier.len();
    let mut tan = vec![false; n];
    for &i in &t.tangibles {
        tan[i] = true;
    }
    let mut qz = vec![false; n];
    for a in 0..n {
        qz[t.add[a][t.neg[a]]] = true;
    }
    let surp = match &t.surpass {
        FiniteSurpass::Circ => {
            (0..n).map(|a| (0..n).map(|b| a == b || (0..n).any(|q| qz[q] && t.add[b][q] == a)).collect()).collect()
        }
        FiniteSurpass::Subset { sets, .. } => {
            (0..n).map(|a| (0..n).map(|b| sets[b] & !sets[a] == 0).collect()).collect()
        }
        FiniteSurpass::Equality => (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect(),
    };
    // BFS over sums of tangibles
    let mut heights = vec![Height::Beyond(n as u32); n];
    let mut decomp: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut queue = VecDeque::new();
    if let Some(z) = t.zero {
        heights[z] = Height::Exact(0);
        decomp[z] = Some(Vec::new());
    }
    for &a in &t.tangibles {
        if decomp[a].is_none() {
            heights[a] = Height::Exact(1);
            decomp[a] = Some(vec![a]);
            queue.push_back(a);
        }
    }
    while let Some(x) = queue.pop_front() {
        let hx = match heights[x] {
            Height::Exact(h) => h,
            Height::Beyond(_) => unreachable!(),
        };
        for &tg in &t.tangibles {
            let s = t.add[x][tg];
            if decomp[s].is_none() {
                let mut d = decomp[x].clone().unwrap_or_default();
                d.push(tg);
                decomp[s] = Some(d);
                heights[s] = Height::Exact(hx + 1);
                queue.push_back(s);
            }
        }
    }
    let names = t.carrier.iter().enumerate().map(|(i, c)| (normalize(c), i)).collect();
    FiniteSystem { t, tan, qz, surp, heights, decomp, names }
}

/// Structural checks on the table; system-level relation checks live in `axioms`.
pub fn verify_table(t: &FiniteTable) -> std::result::Result<(), AxiomViolation> {
    let n = t.carrier.len();
    let nm = |i: usize| t.carrier.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
    let check_square = |tab: &Vec<Vec<usize>>, what: &str| -> std::result::Result<(), AxiomViolation> {
        if tab.len() != n {
            return Err(AxiomViolation::NotTotal {
                table: what.into(),
                row: format!("{}", tab.len()),
                col: "-".into(),
            });
        }
        for (i, row) in tab.iter().enumerate() {
            if row.len() != n {
                return Err(AxiomViolation::NotTotal { table: what.into(), row: nm(i), col: format!("{}", row.len()) });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(AxiomViolation::NotTotal { table: what.into(), row: nm(i), col: nm(j) });
                }
            }
        }
        Ok(())
    };
    check_square(&t.add, "add")?;
    if let Some(m) = &t.mul {
        check_square(m, "mul")?;
    }
    if t.neg.len() != n || t.neg.iter().any(|&v| v >= n) {
        return Err(AxiomViolation::NotTotal { table: "neg".into(), row: "-".into(), col: "-".into() });
    }
    let add = &t.add;
    for a in 0..n {
        for b in 0..n {
            if add[a][b] != add[b][a] {
                return Err(AxiomViolation::AddNotCommutative(nm(a), nm(b)));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return Err(AxiomViolation::AddNotAssociative(nm(a), nm(b), nm(c)));
                }
            }
        }
    }
    if let Some(z) = t.zero {
        for a in 0..n {
            if add[z][a] != a {
                return Err(AxiomViolation::ZeroNotNeutral(nm(a)));
            }
        }
    }
    let neg = &t.neg;
    for a in 0..n {
        if neg[neg[a]] != a {
            return Err(AxiomViolation::NegNotInvolution(nm(a)));
        }
        for b in 0..n {
            if neg[add[a][b]] != add[neg[a]][neg[b]] {
                return Err(AxiomViolation::NegNotAdditive(nm(a), nm(b)));
            }
        }
    }
    let mut tan = vec![false; n];
    for &a in &t.tangibles {
        tan[a] = true;
    }
    for &a in &t.tangibles {
        if !tan[neg[a]] {
            return Err(AxiomViolation::TangibleNegation(nm(a)));
        }
        if Some(a) == t.zero {
            return Err(AxiomViolation::TangibleQuasiZero(nm(a)));
        }
    }
    if t.level == TripleLevel::Triple {
        for a in 0..n {
            let c = add[a][neg[a]];
            if tan[c] {
                return Err(AxiomViolation::TangibleQuasiZero(nm(c)));
            }
        }
    }
    // generation by tangibles
    let mut reach = vec![false; n];
    if let Some(z) = t.zero {
        reach[z] = true;
    }
    let mut stack: Vec<usize> = t.tangibles.clone();
    for &a in &stack {
        reach[a] = true;
    }
    while let Some(x) = stack.pop() {
        for &tg in &t.tangibles {
            let s = add[x][tg];
            if !reach[s] {
                reach[s] = true;
                stack.push(s);
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| !reach[a]) {
        return Err(AxiomViolation::NotGenerated(nm(a)));
    }
    if let Some(m) = &t.mul {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m[m[a][b]][c] != m[a][m[b][c]] {
                        return Err(AxiomViolation::MulNotAssociative(nm(a), nm(b), nm(c)));
                    }
                }
            }
        }
        if let Some(z) = t.zero {
            for a in 0..n {
                if m[z][a] != z || m[a][z] != z {
                    return Err(AxiomViolation::ZeroNotAbsorbing(nm(a)));
                }
            }
        }
        if let Some(o) = t.one {
            for a in 0..n {
                if m[o][a] != a || m[a][o] != a {
                    return Err(AxiomViolation::OneNotUnit(nm(a)));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let p = m[a][b];
                if neg[p] != m[neg[a]][b] || neg[p] != m[a][neg[b]] {
                    return Err(AxiomViolation::NegNotMultiplicative(nm(a), nm(b)));
                }
            }
        }
        for &a in &t.tangibles {
            for b in 0..n {
                for c in 0..n {
                    if m[a][add[b][c]] != add[m[a][b]][m[a][c]] || m[add[b][c]][a] != add[m[b][a]][m[c][a]] {
                        return Err(AxiomViolation::NotDistributive(nm(a), nm(b), nm(c)));
                    }
                }
            }
        }
    }
    Ok(())
}

impl SystemImpl for FiniteSystem {
    fn name(&self) -> String {
        self.t.name.clone()
    }
    fn family(&self) -> Family {
        self.t.family
    }
    fn surpass_kind(&self) -> SurpassKind {
        match self.t.surpass {
            FiniteSurpass::Circ => SurpassKind::Circ,
            FiniteSurpass::Subset { .. } => SurpassKind::Subset,
            FiniteSurpass::Equality => SurpassKind::Equality,
        }
    }
    fn level(&self) -> TripleLevel {
        self.t.level
    }
    fn has_mul(&self) -> bool {
        self.t.mul.is_some()
    }
    fn zero(&self) -> Option<Val> {
        self.t.zero.map(|z| Val::Idx(z as u32))
    }
    fn one(&self) -> Option<Val> {
        self.t.one.map(|z| Val::Idx(z as u32))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(Val::Idx(self.t.add[Self::idx(a)][Self::idx(b)] as u32))
    }
    fn neg(&self, a: &Val) -> Val {
        Val::Idx(self.t.neg[Self::idx(a)] as u32)
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        match &self.t.mul {
            Some(m) => Ok(Val::Idx(m[Self::idx(a)][Self::idx(b)] as u32)),
            None => Err(Error::NoMultiplication(self.name())),
        }
    }
    fn is_tangible(&self, a: &Val) -> bool {
        self.tan[Self::idx(a)]
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        self.qz[Self::idx(a)]
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        self.surp[Self::idx(a)][Self::idx(b)]
    }
    fn surpasses_zero(&self, a: &Val) -> bool {
        let i = Self::idx(a);
        match &self.t.surpass {
            FiniteSurpass::Circ => Some(i) == self.t.zero || self.qz[i],
            FiniteSurpass::Subset { sets, zero_bit } => zero_bit.map(|z| sets[i] >> z & 1 == 1).unwrap_or(false),
            FiniteSurpass::Equality => Some(i) == self.t.zero,
        }
    }
    fn height(&self, a: &Val, _bound: u32) -> Height {
        self.heights[Self::idx(a)]
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        self.decomp[Self::idx(a)].as_ref().map(|d| d.iter().map(|&i| Val::Idx(i as u32)).collect())
    }
    fn carrier(&self) -> Option<Vec<Val>> {
        Some((0..self.size()).map(|i| Val::Idx(i as u32)).collect())
    }
    fn format(&self, a: &Val) -> String {
        self.t.carrier[Self::idx(a)].clone()
    }
    fn finite(&self) -> Option<&FiniteTable> {
        Some(&self.t)
    }
    fn parse(&self, s: &str) -> Result<Val> {
        self.names
            .get(&normalize(s))
            .map(|&i| Val::Idx(i as u32))
            .ok_or_else(|| Error::parse(1, 1, format!("`{s}` is not an element of {}", self.t.name)))
    }
}

/// Access the table behind a finite handle.
pub fn finite_table(h: &SystemHandle) -> Option<FiniteTable> {
    if let Some(t) = h.imp().finite() {
        return Some(t.clone());
    }
    let carrier = h.imp().carrier()?;
    let imp = h.imp();
    let n = carrier.len();
    let ix = |v: &Val| match v {
        Val::Idx(i) => Some(*i as usize),
        _ => None,
    };
    let mut t = FiniteTable::new(&imp.name(), carrier.iter().map(|v| imp.format(v)).collect());
    for a in 0..n {
        for b in 0..n {
            t.add[a][b] = ix(&imp.add(&carrier[a], &carrier[b]).ok()?)?;
        }
        t.neg[a] = ix(&imp.neg(&carrier[a]))?;
    }
    if imp.has_mul() {
        let mut m = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                m[a][b] = ix(&imp.mul(&carrier[a], &carrier[b]).ok()?)?;
            }
        }
        t.mul = Some(m);
    }
    t.tangibles = (0..n).filter(|&a| imp.is_tangible(&carrier[a])).collect();
    t.zero = imp.zero().as_ref().and_then(ix);
    t.one = imp.one().as_ref().and_then(ix);
    t.level = imp.level();
    t.family = imp.family();
    t.surpass = match imp.surpass_kind() {
        SurpassKind::Equality => FiniteSurpass::Equality,
        _ => FiniteSurpass::Circ,
    };
    Some(t)
}
