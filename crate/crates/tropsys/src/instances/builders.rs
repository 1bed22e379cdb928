//! Finite instances built from closed-form rules.

use crate::core::{SystemHandle, TripleLevel};
use crate::error::Result;
use crate::instances::finite::{load_finite_system, FiniteTable};

fn from_rules(
    name: &str,
    names: Vec<String>,
    add: impl Fn(usize, usize) -> usize,
    neg: impl Fn(usize) -> usize,
    mul: Option<&dyn Fn(usize, usize) -> usize>,
    tangible: impl Fn(usize) -> bool,
    zero: Option<usize>,
    one: Option<usize>,
) -> FiniteTable {
    let n = names.len();
    let mut t = FiniteTable::new(name, names);
    for a in 0..n {
        for b in 0..n {
            t.add[a][b] = add(a, b);
        }
        t.neg[a] = neg(a);
    }
    if let Some(m) = mul {
        t.mul = Some((0..n).map(|a| (0..n).map(|b| m(a, b)).collect()).collect());
    }
    t.tangibles = (0..n).filter(|&a| tangible(a)).collect();
    t.zero = zero;
    t.one = one;
    t
}

/// {0, 1} with 1 + 1 = 1. Only a pseudo-triple, since 1 = 1°.
pub fn boolean_table() -> FiniteTable {
    let mut t = from_rules(
        "boolean",
        vec!["0".into(), "1".into()],
        |a, b| a.max(b),
        |a| a,
        Some(&|a, b| a.min(b)),
        |a| a == 1,
        Some(0),
        Some(1),
    );
    t.level = TripleLevel::Pseudo;
    t
}

pub fn make_boolean() -> Result<SystemHandle> {
    load_finite_system(boolean_table())
}

/// {0, 1, 1ν}: the supertropical Boolean semifield.
pub fn make_boolean_supertropical() -> Result<SystemHandle> {
    load_finite_system(supertropical_chain_table(1))
}

/// Supertropical chain over a k-element ordered magnitude set: 0, t1..tk, g1..gk.
/// Multiplication exists only for k = 1.
pub fn supertropical_chain_table(k: usize) -> FiniteTable {
    let mut names = vec!["0".to_string()];
    names.extend((1..=k).map(|i| if k == 1 { "1".to_string() } else { format!("t{i}") }));
    names.extend((1..=k).map(|i| if k == 1 { "1ν".to_string() } else { format!("g{i}") }));
    // index -> (magnitude, ghost)
    let dec = move |x: usize| -> (usize, bool) {
        if x == 0 {
            (0, true)
        } else if x <= k {
            (x, false)
        } else {
            (x - k, true)
        }
    };
    let enc = move |m: usize, g: bool| {
        if m == 0 {
            0
        } else if g {
            m + k
        } else {
            m
        }
    };
    let add = move |a: usize, b: usize| {
        let (ma, ga) = dec(a);
        let (mb, gb) = dec(b);
        if ma > mb {
            a
        } else if mb > ma {
            b
        } else {
            enc(ma, ma > 0 && (ga || gb || a == b))
        }
    };
    let mul_fn = move |a: usize, b: usize| {
        let (ma, ga) = dec(a);
        let (mb, gb) = dec(b);
        if ma == 0 || mb == 0 {
            0
        } else {
            enc(1, ga || gb)
        }
    };
    let name = if k == 1 { "boolean-supertropical".to_string() } else { format!("supertropical-chain-{k}") };
    from_rules(
        &name,
        names,
        add,
        |a| a,
        if k == 1 { Some(&mul_fn) } else { None },
        move |a| a >= 1 && a <= k,
        Some(0),
        if k == 1 { Some(1) } else { None },
    )
}

pub fn make_supertropical_chain(k: usize) -> Result<SystemHandle> {
    load_finite_system(supertropical_chain_table(k))
}

/// {0, 1, -1, inf}: the sign system (symmetrized Boolean semiring).
pub fn sign_table() -> FiniteTable {
    // 0, 1, -1, inf
    let add = |a: usize, b: usize| {
        if a == 0 {
            b
        } else if b == 0 || a == b {
            a
        } else {
            3
        }
    };
    let neg = |a: usize| match a {
        1 => 2,
        2 => 1,
        x => x,
    };
    let mul = |a: usize, b: usize| match (a, b) {
        (0, _) | (_, 0) => 0,
        (3, _) | (_, 3) => 3,
        (x, y) if x == y => 1,
        _ => 2,
    };
    from_rules(
        "sign",
        vec!["0".into(), "1".into(), "-1".into(), "inf".into()],
        add,
        neg,
        Some(&mul),
        |a| a == 1 || a == 2,
        Some(0),
        Some(1),
    )
}

pub fn make_sign_system() -> Result<SystemHandle> {
    load_finite_system(sign_table())
}

fn pair_names(layers: &[String], g_size: usize) -> Vec<String> {
    let mut v = Vec::new();
    for l in layers {
        for g in 1..=g_size {
            v.push(format!("({l},{g})"));
        }
    }
    v
}

/// Layers {1..n} added with saturation at n, magnitudes a chain 1..g_size, no zero.
/// Tangibles are layer 1; negation is the identity.
pub fn truncated_layered_table(n: usize, g_size: usize) -> FiniteTable {
    assert!(n >= 1 && g_size >= 1);
    let layers: Vec<String> = (1..=n).map(|l| l.to_string()).collect();
    let names = pair_names(&layers, g_size);
    let dec = move |x: usize| (x / g_size + 1, x % g_size);
    let enc = move |l: usize, m: usize| (l - 1) * g_size + m;
    let add = move |a: usize, b: usize| {
        let (la, ma) = dec(a);
        let (lb, mb) = dec(b);
        if ma > mb {
            a
        } else if mb > ma {
            b
        } else {
            enc((la + lb).min(n), ma)
        }
    };
    let mul = move |a: usize, b: usize| {
        let (la, _) = dec(a);
        let (lb, _) = dec(b);
        enc((la * lb).min(n), 0)
    };
    let mut t = from_rules(
        &format!("truncated-layered-{n}x{g_size}"),
        names,
        add,
        |a| a,
        if g_size == 1 { Some(&mul) } else { None },
        move |a| dec(a).0 == 1,
        None,
        if g_size == 1 { Some(0) } else { None },
    );
    if n == 1 {
        t.level = TripleLevel::Pseudo;
    }
    t
}

pub fn make_truncated_layered(n: usize, g_size: usize) -> Result<SystemHandle> {
    load_finite_system(truncated_layered_table(n, g_size))
}

/// Layers ℤ/n with negation ℓ ↦ -ℓ, tangibles on layers ±1, magnitudes a chain, zero adjoined.
pub fn zn_layered_table(n: usize, g_size: usize) -> FiniteTable {
    assert!(n >= 1 && g_size >= 1);
    let layers: Vec<String> = (0..n).map(|l| l.to_string()).collect();
    let mut names = vec!["0".to_string()];
    names.extend(pair_names(&layers, g_size));
    let dec = move |x: usize| ((x - 1) / g_size, (x - 1) % g_size);
    let enc = move |l: usize, m: usize| 1 + l * g_size + m;
    let add = move |a: usize, b: usize| {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let (la, ma) = dec(a);
        let (lb, mb) = dec(b);
        if ma > mb {
            a
        } else if mb > ma {
            b
        } else {
            enc((la + lb) % n, ma)
        }
    };
    let neg = move |a: usize| {
        if a == 0 {
            0
        } else {
            let (l, m) = dec(a);
            enc((n - l) % n, m)
        }
    };
    let mul = move |a: usize, b: usize| {
        if a == 0 || b == 0 {
            0
        } else {
            enc(dec(a).0 * dec(b).0 % n, 0)
        }
    };
    let mut t = from_rules(
        &format!("zn-layered-{n}x{g_size}"),
        names,
        add,
        neg,
        if g_size == 1 { Some(&mul) } else { None },
        move |a| a != 0 && (dec(a).0 == 1 % n || dec(a).0 == (n - 1) % n),
        Some(0),
        if g_size == 1 { Some(enc(1 % n, 0)) } else { None },
    );
    if n == 1 {
        t.level = TripleLevel::Pseudo;
    }
    t
}

pub fn make_zn_layered(n: usize, g_size: usize) -> Result<SystemHandle> {
    load_finite_system(zn_layered_table(n, g_size))
}

/// Layers in GF(4) = {0, 1, w, w2}, identity negation, zero adjoined.
pub fn gf4_layered_table(g_size: usize) -> FiniteTable {
    let layers: Vec<String> = ["0", "1", "w", "w2"].iter().map(|s| s.to_string()).collect();
    let mut names = vec!["z".to_string()];
    names.extend(pair_names(&layers, g_size));
    // GF(4) elements as 2-bit vectors: 0, 1, w, w + 1
    const GMUL: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
    let dec = move |x: usize| ((x - 1) / g_size, (x - 1) % g_size);
    let enc = move |l: usize, m: usize| 1 + l * g_size + m;
    let add = move |a: usize, b: usize| {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let (la, ma) = dec(a);
        let (lb, mb) = dec(b);
        if ma > mb {
            a
        } else if mb > ma {
            b
        } else {
            enc(la ^ lb, ma)
        }
    };
    let mul = move |a: usize, b: usize| if a == 0 || b == 0 { 0 } else { enc(GMUL[dec(a).0][dec(b).0], 0) };
    from_rules(
        &format!("gf4-layered-{g_size}"),
        names,
        add,
        |a| a,
        if g_size == 1 { Some(&mul) } else { None },
        move |a| a != 0 && dec(a).0 != 0,
        Some(0),
        if g_size == 1 { Some(enc(1, 0)) } else { None },
    )
}

pub fn make_gf4_layered(g_size: usize) -> Result<SystemHandle> {
    load_finite_system(gf4_layered_table(g_size))
}
