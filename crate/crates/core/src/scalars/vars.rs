//! Variable names and the session variable order.
//!
//! Exponent vectors index into a process-global interner. The canonical
//! variables are registered up front in a fixed order so that the graded
//! lexicographic monomial order (and hence every serialized certificate)
//! is deterministic across runs.

use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::RwLock;

/// Index of a variable in the session order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u32);

struct Interner {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

static CANONICAL: &[&str] = &[
    "q", "t", "u", "z", "alpha", "gamma", "b", "qprime", //
    "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", //
    "s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8",
];

static INTERNER: Lazy<RwLock<Interner>> = Lazy::new(|| {
    let mut it = Interner { names: Vec::new(), index: HashMap::new() };
    for name in CANONICAL {
        let id = it.names.len() as u32;
        it.names.push((*name).to_string());
        it.index.insert((*name).to_string(), id);
    }
    RwLock::new(it)
});

impl Var {
    /// Interns `name`, registering it at the end of the session order if new.
    pub fn named(name: &str) -> Var {
        {
            let it = INTERNER.read().unwrap();
            if let Some(&id) = it.index.get(name) {
                return Var(id);
            }
        }
        let mut it = INTERNER.write().unwrap();
        if let Some(&id) = it.index.get(name) {
            return Var(id);
        }
        let id = it.names.len() as u32;
        it.names.push(name.to_string());
        it.index.insert(name.to_string(), id);
        Var(id)
    }

    pub fn name(self) -> String {
        INTERNER.read().unwrap().names[self.0 as usize].clone()
    }

    pub fn q() -> Var {
        Var(0)
    }
    pub fn t() -> Var {
        Var(1)
    }
    pub fn u() -> Var {
        Var(2)
    }
    pub fn z() -> Var {
        Var(3)
    }
    pub fn alpha() -> Var {
        Var(4)
    }
    pub fn gamma() -> Var {
        Var(5)
    }
    pub fn b() -> Var {
        Var(6)
    }
    pub fn qprime() -> Var {
        Var(7)
    }

    /// The chain variable `v_i`, 1-based.
    pub fn v(i: usize) -> Var {
        if (1..=8).contains(&i) {
            Var(7 + i as u32)
        } else {
            Var::named(&format!("v{i}"))
        }
    }

    /// The Lassalle variable `s_i`, 1-based.
    pub fn s(i: usize) -> Var {
        if (1..=8).contains(&i) {
            Var(15 + i as u32)
        } else {
            Var::named(&format!("s{i}"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_fixed() {
        assert_eq!(Var::named("q"), Var::q());
        assert_eq!(Var::named("t"), Var::t());
        assert!(Var::q() < Var::t());
        assert_eq!(Var::v(2).name(), "v2");
        assert_eq!(Var::s(1).name(), "s1");
        let w = Var::named("w_extra");
        assert!(w > Var::s(8));
        assert_eq!(w, Var::named("w_extra"));
    }
}
