use novikov::expr::{evaluate, parse};
use novikov::realization::{phi, phi_inv, t_mul};
use novikov::{circ, d0, BasisSymbol, Element, Kind, Rational};
use proptest::prelude::*;

fn symbol() -> impl Strategy<Value = Option<BasisSymbol>> {
    (any::<bool>(), 0u64..=8).prop_map(|(a, n)| BasisSymbol::new(if a { Kind::A } else { Kind::B }, n))
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((symbol(), -6i64..=6, 1i64..=4), 0..5).prop_map(|terms| {
        Element::from_terms(terms.into_iter().filter_map(|(s, p, q)| s.map(|s| (Rational::new(p.into(), q.into()), s))))
    })
}

proptest! {
    #[test]
    fn product_is_commutative(x in element(), y in element()) {
        prop_assert_eq!(x.product(&y), y.product(&x));
    }

    #[test]
    fn product_is_bilinear(x in element(), y in element(), z in element(), p in -5i64..5) {
        let c = Rational::from_integer(p.into());
        let lhs = (&x.scale(&c) + &y).product(&z);
        let rhs = &x.product(&z).scale(&c) + &y.product(&z);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_form_is_idempotent(x in element()) {
        let again = Element::from_terms(x.terms().map(|(s, c)| (c.clone(), *s)));
        prop_assert_eq!(&again, &x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Element>(&json).unwrap(), x);
    }

    #[test]
    fn phi_is_a_ring_isomorphism(x in element(), y in element()) {
        prop_assert_eq!(phi_inv(&phi(&x)), x.clone());
        prop_assert_eq!(phi(&x.product(&y)), t_mul(&phi(&x), &phi(&y)));
        prop_assert_eq!(phi(&d0(&x)), phi(&x).t_derivative());
    }

    #[test]
    fn printed_element_reads_back(x in element(), y in element(), a in element()) {
        let v = circ(&x, &y, &a);
        let back = evaluate(&parse(&v.to_string()).unwrap(), &Element::one()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn expression_print_parse_fixed_point(x in element(), y in element(), z in element()) {
        let text = format!("[{x}, {y}] * ({z}) - D0({x}) o der({y}; {z})");
        let ast = parse(&text).unwrap();
        let printed = ast.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), ast.clone());
        prop_assert_eq!(parse(&printed).unwrap().to_string(), printed);
    }
}
