use crate::pacman::strip_layer;
use omwis_classify::{classify, Class, ComplexityClass};
use omwis_core::Pattern;
use omwis_poly::Direction;

/// Core solver a pattern routes to, with its gap parameter where one applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    P3Free,
    ChordFree(Direction),
    OneEdgeK(usize),
    Aakbb(usize),
    Ababk(usize),
    Abbak(usize),
    Generic,
}

impl Engine {
    pub fn label(&self) -> String {
        match self {
            Engine::P3Free => "p3".into(),
            Engine::ChordFree(Direction::Forward) => "chord".into(),
            Engine::ChordFree(Direction::Mirrored) => "chordrev".into(),
            Engine::OneEdgeK(k) => format!("oneedge({k})"),
            Engine::Aakbb(k) => format!("aakbb({k})"),
            Engine::Ababk(k) => format!("ababk({k})"),
            Engine::Abbak(k) => format!("abbak({k})"),
            Engine::Generic => "generic".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Route {
    /// Guess-the-ends layers to run before the core engine; each strips one
    /// isolated position off every end of the pattern that has one.
    pub layers: usize,
    /// What is left of the pattern once the ends are gone.
    pub core: Pattern,
    pub class: ComplexityClass,
    pub engine: Engine,
}

/// Decide how to solve `h`-free instances. Stripping isolated ends first
/// keeps the classifier honest: once the core carries an edge at both ends,
/// any embedding into a padded family host must avoid the padding entirely,
/// so containment collapses to the family member itself and the matched
/// class's solver is sound on every instance the end-guessing produces. The
/// classifier scans the cheapest classes first, which settles patterns
/// lying in several families.
pub fn plan_route(h: &Pattern) -> Route {
    let mut core = h.clone();
    let mut layers = 0;
    while let Some(inner) = strip_layer(&core) {
        core = inner;
        layers += 1;
    }
    let class = classify(&core);
    let engine = match (class.class, class.family.as_deref(), class.k) {
        (Class::Polynomial, Some("p3"), _) => Engine::P3Free,
        (Class::Polynomial, Some("chord"), _) => Engine::ChordFree(Direction::Forward),
        (Class::Polynomial, Some("chordrev"), _) => Engine::ChordFree(Direction::Mirrored),
        (Class::Polynomial, Some("oneedge"), Some(k)) => Engine::OneEdgeK(k),
        (Class::Quasipolynomial, Some("aakbb"), Some(k)) => Engine::Aakbb(k),
        (Class::Quasipolynomial, Some("ababk"), Some(k)) => Engine::Ababk(k),
        (Class::Subexponential, Some("abbak"), Some(k)) => Engine::Abbak(k),
        _ => Engine::Generic,
    };
    Route { layers, core, class, engine }
}

#[cfg(test)]
mod tests {
    use super::*;
    use omwis_classify::parse_pattern_spec;

    fn route(spec: &str) -> Route {
        let h = parse_pattern_spec(spec).unwrap();
        let first = plan_route(&h);
        // Identical patterns must route identically.
        assert_eq!(first, plan_route(&h), "routing is not a pure function of {spec}");
        first
    }

    #[test]
    fn routing_table() {
        assert_eq!(route("p3").engine, Engine::P3Free);
        assert_eq!(route("chord").engine, Engine::ChordFree(Direction::Forward));
        assert_eq!(route("chordrev").engine, Engine::ChordFree(Direction::Mirrored));
        assert_eq!(route("3:1-3").engine, Engine::OneEdgeK(1));
        assert_eq!(route("aabb").engine, Engine::Aakbb(0));
        assert_eq!(route("5:1-2,4-5").engine, Engine::Aakbb(1));
        assert_eq!(route("abab").engine, Engine::Ababk(0));
        assert_eq!(route("abba").engine, Engine::Abbak(0));
        assert_eq!(route("6:1-6,3-4").engine, Engine::Abbak(1));
        assert_eq!(route("6:1-2,3-4,5-6").engine, Engine::Generic);
        assert_eq!(route("6:1-2,3-4,5-6").class.class, Class::NPHard);
    }

    #[test]
    fn padded_patterns_strip_down_to_their_core() {
        let r = route("ext abba(2)");
        assert_eq!(r.layers, 2);
        assert_eq!(r.core.literal(), "4:1-4,2-3");
        assert_eq!(r.engine, Engine::Abbak(0));

        let r = route("ext p3(1)");
        assert_eq!((r.layers, r.engine), (1, Engine::P3Free));

        // Unbalanced padding peels one end at a time once the other is bare.
        let r = route("5:2-3");
        assert_eq!((r.layers, r.engine), (2, Engine::P3Free));
        assert_eq!(r.core.literal(), "2:1-2");
    }

    #[test]
    fn an_edge_routes_to_the_cheapest_class() {
        let r = route("2:1-2");
        assert_eq!(r.layers, 0);
        assert_eq!(r.engine, Engine::P3Free);
        assert_eq!(r.class.class, Class::Polynomial);
    }

    #[test]
    fn edgeless_patterns_degenerate_to_the_fallback() {
        let r = route("3:");
        assert_eq!(r.layers, 2);
        assert_eq!(r.core.literal(), "0:");
        assert_eq!(r.engine, Engine::Generic);
        assert!(r.class.degenerate);
    }
}
