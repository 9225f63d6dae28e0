use belief_kernel::logic::{formula_from_models, parse_formula};
use belief_kernel::{BeliefSet, Formula, LogicError, Signature, World, WorldSet};
use proptest::prelude::*;

/// Test-side formula tree, rendered to text and evaluated independently of
/// the crate's parser and evaluator.
#[derive(Clone, Debug)]
enum T {
    Atom(usize),
    Top,
    Bot,
    Not(Box<T>),
    And(Box<T>, Box<T>),
    Or(Box<T>, Box<T>),
    Imp(Box<T>, Box<T>),
    Iff(Box<T>, Box<T>),
}

impl T {
    /// Fully parenthesized text.
    fn text(&self, atoms: &[&str]) -> String {
        match self {
            T::Atom(i) => atoms[*i].to_string(),
            T::Top => "top".into(),
            T::Bot => "bot".into(),
            T::Not(x) => format!("!({})", x.text(atoms)),
            T::And(x, y) => format!("({}) & ({})", x.text(atoms), y.text(atoms)),
            T::Or(x, y) => format!("({}) | ({})", x.text(atoms), y.text(atoms)),
            T::Imp(x, y) => format!("({}) -> ({})", x.text(atoms), y.text(atoms)),
            T::Iff(x, y) => format!("({}) <-> ({})", x.text(atoms), y.text(atoms)),
        }
    }

    /// Truth under an assignment given as a list of atom values.
    fn truth(&self, v: &[bool]) -> bool {
        match self {
            T::Atom(i) => v[*i],
            T::Top => true,
            T::Bot => false,
            T::Not(x) => !x.truth(v),
            T::And(x, y) => x.truth(v) && y.truth(v),
            T::Or(x, y) => x.truth(v) || y.truth(v),
            T::Imp(x, y) => !x.truth(v) || y.truth(v),
            T::Iff(x, y) => x.truth(v) == y.truth(v),
        }
    }
}

fn tree(atoms: usize) -> impl Strategy<Value = T> {
    let leaf = prop_oneof![
        4 => (0..atoms).prop_map(T::Atom),
        1 => Just(T::Top),
        1 => Just(T::Bot),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|x| T::Not(Box::new(x))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| T::And(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| T::Or(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| T::Imp(Box::new(x), Box::new(y))),
            (inner.clone(), inner).prop_map(|(x, y)| T::Iff(Box::new(x), Box::new(y))),
        ]
    })
}

/// Models by brute force: world w assigns atom i false iff bit (n-1-i) is set.
fn oracle_models(t: &T, n: usize) -> WorldSet {
    let mut ws = WorldSet::EMPTY;
    for w in 0..(1usize << n) {
        let v: Vec<bool> = (0..n).map(|i| w & (1 << (n - 1 - i)) == 0).collect();
        if t.truth(&v) {
            ws.insert(World(w as u8));
        }
    }
    ws
}

const ATOMS: [&str; 3] = ["p", "q", "r"];

proptest! {
    #[test]
    fn parser_agrees_with_truth_tables(t in tree(3)) {
        let sig = Signature::new(ATOMS).unwrap();
        let f = Formula::parse(&sig, &t.text(&ATOMS)).unwrap();
        prop_assert_eq!(f.models(), oracle_models(&t, 3));
    }

    #[test]
    fn display_roundtrips(t in tree(3)) {
        let sig = Signature::new(ATOMS).unwrap();
        let f = Formula::parse(&sig, &t.text(&ATOMS)).unwrap();
        let again = Formula::parse(&sig, &f.to_string()).unwrap();
        prop_assert_eq!(again.models(), f.models());
    }

    #[test]
    fn dnf_denotes_its_models(bits in 0u64..256) {
        let sig = Signature::new(ATOMS).unwrap();
        let f = formula_from_models(&sig, WorldSet(bits));
        prop_assert_eq!(f.models(), WorldSet(bits));
        prop_assert_eq!(Formula::parse(&sig, &f.to_string()).unwrap().models(), WorldSet(bits));
    }

    #[test]
    fn entailment_is_model_inclusion(x in tree(3), y in tree(3)) {
        let sig = Signature::new(ATOMS).unwrap();
        let fx = Formula::parse(&sig, &x.text(&ATOMS)).unwrap();
        let fy = Formula::parse(&sig, &y.text(&ATOMS)).unwrap();
        let (mx, my) = (oracle_models(&x, 3), oracle_models(&y, 3));
        prop_assert_eq!(fx.entails(&fy), mx.is_subset(my));
        prop_assert_eq!(BeliefSet::of(&fx).entails(&fy), mx.is_subset(my));
    }
}

#[test]
fn world_order_and_text() {
    let sig = Signature::new(["a", "b"]).unwrap();
    let texts: Vec<String> = sig.worlds().map(|w| sig.world_text(w)).collect();
    assert_eq!(texts, ["a b", "a -b", "-a b", "-a -b"]);
    assert_eq!(sig.parse_world("-b a").unwrap(), World(1));
    assert!(sig.parse_world("a").is_err());
    assert!(sig.parse_world("a a").is_err());
}

#[test]
fn precedence() {
    let sig = Signature::new(["a", "b", "c"]).unwrap();
    let m = |t: &str| parse_formula(&sig, t).unwrap().models();
    assert_eq!(m("a | b & c"), m("a | (b & c)"));
    assert_eq!(m("!a & b"), m("(!a) & b"));
    assert_eq!(m("a -> b -> c"), m("a -> (b -> c)"));
    assert_eq!(m("a & b -> c"), m("(a & b) -> c"));
    assert_eq!(m("a <-> b <-> c"), m("(a <-> b) <-> c"));
}

#[test]
fn errors_carry_positions() {
    let sig = Signature::new(["a", "b"]).unwrap();
    assert!(matches!(
        Formula::parse(&sig, "a & zz"),
        Err(LogicError::UnknownAtom { ref name, position: 4 }) if name == "zz"
    ));
    assert!(matches!(Formula::parse(&sig, "a &"), Err(LogicError::Syntax { .. })));
    assert!(matches!(Formula::parse(&sig, "(a"), Err(LogicError::Syntax { .. })));
    assert!(matches!(Formula::parse(&sig, "a b"), Err(LogicError::Syntax { .. })));
}

#[test]
fn signature_validation() {
    assert!(Signature::new(["a", "a"]).is_err());
    assert!(Signature::new(["top"]).is_err());
    assert!(Signature::new(["1x"]).is_err());
    assert!(Signature::new(Vec::<String>::new()).is_err());
    assert!(Signature::with_size(7).is_err());
    assert_eq!(Signature::with_size(3).unwrap().atoms(), ["a", "b", "c"]);
}

#[test]
fn dnf_rendering_is_canonical() {
    let sig = Signature::new(["a", "b"]).unwrap();
    assert_eq!(formula_from_models(&sig, WorldSet::EMPTY).to_string(), "bot");
    assert_eq!(formula_from_models(&sig, WorldSet(0b1111)).to_string(), "top");
    assert_eq!(formula_from_models(&sig, WorldSet(0b0101)).to_string(), "a & b | !a & b");
}

#[test]
fn belief_set_operations() {
    let sig = Signature::new(["a", "b"]).unwrap();
    let f = |t: &str| Formula::parse(&sig, t).unwrap();
    let k = BeliefSet::of(&f("a"));
    assert!(k.entails(&f("a | b")));
    assert!(!k.entails(&f("b")));
    assert_eq!(k.expand(&f("b")).models(), f("a & b").models());
    assert_eq!(k.intersection(&BeliefSet::of(&f("b"))).models(), f("a | b").models());
    assert!(!BeliefSet::of(&f("a & b")).is_subset(&k));
    assert!(k.is_subset(&BeliefSet::of(&f("a & b"))));
    assert!(!BeliefSet::of(&f("a & !a")).is_consistent());
}
