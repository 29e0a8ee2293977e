use super::{extended_permutohedron, Elem, FiniteOrtholattice, Relation};
use crate::error::LatticeError;

/// Names understood by [`catalogue`]. Parameterized forms take integer or
/// lattice arguments.
pub const CATALOGUE_NAMES: &[&str] = &[
    "O6",
    "MC8",
    "boolean(n)",
    "MO(k)",
    "product(L1,L2)",
    "rb2",
];

/// The hexagon: `0 < b < a < 1` and `0 < ~a < ~b < 1`.
pub fn o6() -> FiniteOrtholattice {
    FiniteOrtholattice::from_names(
        &["0", "a", "b", "~a", "~b", "1"],
        &[
            ("0", "b"),
            ("b", "a"),
            ("a", "1"),
            ("0", "~a"),
            ("~a", "~b"),
            ("~b", "1"),
        ],
        &[("0", "1"), ("a", "~a"), ("b", "~b")],
        "0",
        "1",
    )
    .expect("hexagon is an ortholattice")
}

/// The ten-element lattice whose exclusion characterizes the partial
/// orthomodularity rule. `d = a & c`, `c = ~a | b`, `a = b | ~c`.
pub fn mc8() -> FiniteOrtholattice {
    FiniteOrtholattice::from_names(
        &["0", "a", "b", "c", "d", "~a", "~b", "~c", "~d", "1"],
        &[
            ("0", "~a"),
            ("0", "b"),
            ("0", "~c"),
            ("b", "d"),
            ("d", "c"),
            ("d", "a"),
            ("~a", "c"),
            ("~a", "~d"),
            ("~c", "~d"),
            ("~c", "a"),
            ("~d", "~b"),
            ("c", "1"),
            ("~b", "1"),
            ("a", "1"),
        ],
        &[
            ("0", "1"),
            ("a", "~a"),
            ("b", "~b"),
            ("c", "~c"),
            ("d", "~d"),
        ],
        "0",
        "1",
    )
    .expect("MC8 is an ortholattice")
}

const ATOMS: [char; 5] = ['a', 'b', 'c', 'd', 'e'];

/// Power set of `n` atoms. Elements are named by their atoms, `0` and `1`
/// for the empty and full set.
pub fn boolean(n: usize) -> Result<FiniteOrtholattice, LatticeError> {
    if n > 5 {
        return Err(LatticeError::SizeBound(format!("boolean({n}): n <= 5")));
    }
    let full = (1usize << n) - 1;
    let name = |s: usize| {
        if s == 0 {
            "0".to_string()
        } else if s == full {
            "1".to_string()
        } else {
            (0..n).filter(|i| s >> i & 1 == 1).map(|i| ATOMS[i]).collect()
        }
    };
    let names: Vec<String> = (0..=full).map(name).collect();
    let mut order = Vec::new();
    for s in 0..=full {
        for i in 0..n {
            if s >> i & 1 == 0 {
                order.push((s, s | 1 << i));
            }
        }
    }
    let comp: Vec<Elem> = (0..=full).map(|s| full & !s).collect();
    FiniteOrtholattice::new(names, &order, comp, 0, full)
}

/// Bottom, top, atoms `a1..ak` and their complements as coatoms.
pub fn mo(k: usize) -> Result<FiniteOrtholattice, LatticeError> {
    if k > 4 {
        return Err(LatticeError::SizeBound(format!("MO({k}): k <= 4")));
    }
    let mut names = vec!["0".to_string()];
    names.extend((1..=k).map(|i| format!("a{i}")));
    names.extend((1..=k).map(|i| format!("~a{i}")));
    names.push("1".into());
    let top = 2 * k + 1;
    let mut order = vec![(0, top)];
    for i in 1..=k {
        order.push((0, i));
        order.push((i, top));
        order.push((k + i, top));
        order.push((0, k + i));
    }
    let mut comp = vec![top];
    comp.extend((1..=k).map(|i| k + i));
    comp.extend(1..=k);
    comp.push(0);
    FiniteOrtholattice::new(names, &order, comp, 0, top)
}

/// Componentwise product.
pub fn product(
    l1: &FiniteOrtholattice,
    l2: &FiniteOrtholattice,
) -> Result<FiniteOrtholattice, LatticeError> {
    let (n1, n2) = (l1.len(), l2.len());
    if n1 * n2 > 64 {
        return Err(LatticeError::SizeBound(format!(
            "product of {n1} and {n2} elements exceeds 64"
        )));
    }
    let id = |x: Elem, y: Elem| x * n2 + y;
    let mut names = Vec::with_capacity(n1 * n2);
    let mut comp = Vec::with_capacity(n1 * n2);
    let mut order = Vec::new();
    for x in l1.elements() {
        for y in l2.elements() {
            names.push(format!("({},{})", l1.name(x), l2.name(y)));
            comp.push(id(l1.comp(x), l2.comp(y)));
            for (a, b) in l1.hasse_edges() {
                if a == x {
                    order.push((id(x, y), id(b, y)));
                }
            }
            for (a, b) in l2.hasse_edges() {
                if a == y {
                    order.push((id(x, y), id(x, b)));
                }
            }
        }
    }
    FiniteOrtholattice::new(
        names,
        &order,
        comp,
        id(l1.bottom(), l2.bottom()),
        id(l1.top(), l2.top()),
    )
}

/// Resolve a catalogue name such as `O6`, `boolean(3)`, `MO(2)`,
/// `product(O6,boolean(1))` or `rb2`.
pub fn catalogue(name: &str) -> Result<FiniteOrtholattice, LatticeError> {
    let unknown = || LatticeError::UnknownCatalogue(name.to_string());
    let s = name.trim();
    let lower = s.to_ascii_lowercase();
    match lower.as_str() {
        "o6" | "hexagon" => return Ok(o6()),
        "mc8" => return Ok(mc8()),
        "rb2" => return extended_permutohedron(&Relation::diamond_order()),
        _ => {}
    }
    let open = s.find('(').ok_or_else(unknown)?;
    if !s.ends_with(')') {
        return Err(unknown());
    }
    let head = s[..open].trim().to_ascii_lowercase();
    let arg = &s[open + 1..s.len() - 1];
    match head.as_str() {
        "boolean" => boolean(arg.trim().parse().map_err(|_| unknown())?),
        "mo" => mo(arg.trim().parse().map_err(|_| unknown())?),
        "product" => {
            let (a, b) = split_top_level_comma(arg).ok_or_else(unknown)?;
            product(&catalogue(a)?, &catalogue(b)?)
        }
        _ => Err(unknown()),
    }
}

fn split_top_level_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}
