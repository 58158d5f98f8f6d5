//! Small named categories used throughout the tests and the corpus.

use std::sync::Arc;

use super::category::{CategoryBuilder, FinCategory, Mor, MorphismRecord, Obj};
use crate::group::FiniteGroup;

/// One object, one morphism.
pub fn terminal() -> Arc<FinCategory> {
    discrete_named("1", 1)
}

/// `n` objects and only identities.
pub fn discrete(n: usize) -> Arc<FinCategory> {
    discrete_named(&format!("disc{n}"), n)
}

fn discrete_named(name: &str, n: usize) -> Arc<FinCategory> {
    let labels = (0..n).map(|i| i.to_string()).collect();
    let records = (0..n)
        .map(|i| MorphismRecord {
            label: format!("id_{i}"),
            source: Obj(i),
            target: Obj(i),
        })
        .collect();
    let ids = (0..n).map(Mor).collect();
    Arc::new(FinCategory::from_fn(name, labels, records, ids, |g, f| (g == f).then_some(f)).expect("discrete category"))
}

/// The poset `0 < 1 < … < n` (so `chain(1)` is the walking arrow `[1]`).
///
/// Morphism `i ≤ j` has id `idx(i, j)` in lexicographic order of pairs.
pub fn chain(n: usize) -> Arc<FinCategory> {
    let k = n + 1;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let idx = |i: usize, j: usize| pairs.iter().position(|p| *p == (i, j)).unwrap();
    let labels = (0..k).map(|i| i.to_string()).collect();
    let records = pairs
        .iter()
        .map(|&(i, j)| MorphismRecord {
            label: if i == j { format!("id_{i}") } else { format!("{i}<{j}") },
            source: Obj(i),
            target: Obj(j),
        })
        .collect();
    let ids = (0..k).map(|i| Mor(idx(i, i))).collect();
    let name = if n == 1 { "[1]".to_string() } else { format!("[{n}]") };
    Arc::new(
        FinCategory::from_fn(name, labels, records, ids, |g, f| {
            let (a, b) = pairs[f.0];
            let (c, d) = pairs[g.0];
            (b == c).then(|| Mor(idx(a, d)))
        })
        .expect("chain poset"),
    )
}

pub fn walking_arrow() -> Arc<FinCategory> {
    chain(1)
}

/// The one-object category `BG`; morphism `g` has id `g`.
pub fn one_object_group(g: &FiniteGroup) -> Arc<FinCategory> {
    let labels = vec!["*".to_string()];
    let records = g
        .elements()
        .map(|a| MorphismRecord {
            label: g.label(a).to_string(),
            source: Obj(0),
            target: Obj(0),
        })
        .collect();
    Arc::new(
        FinCategory::from_fn(
            format!("B{}", g.name()),
            labels,
            records,
            vec![Mor(g.identity())],
            |x, y| Some(Mor(g.mul(x.0, y.0))),
        )
        .expect("one-object group category"),
    )
}

/// Two parallel arrows `a, b: 0 → 1`.
pub fn parallel_pair() -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new("parallel");
    let x = b.object("0");
    let y = b.object("1");
    b.morphism("a", x, y);
    b.morphism("b", x, y);
    Arc::new(b.build().expect("parallel pair"))
}
