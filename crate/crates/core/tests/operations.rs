//! Worked examples for the public operations, one test per operation.

use std::collections::BTreeSet;

use path_ideals::families::{enumerate_trees, enumerate_trees_up_to, make_family, random_chordal, random_tree};
use path_ideals::hypergraph::{
    connected_hypergraph, delete_vertices_hypergraph, dual_hypergraph, height_bight,
    independence_complex, max_induced_matching, minimal_vertex_covers, nu_t, path_hypergraph,
};
use path_ideals::ideal::minimalize;
use path_ideals::oracle::{
    self, betti_table, cm_report, has_linear_resolution, is_componentwise_linear,
    is_vertex_decomposable, is_vertex_decomposable_dual, projective_dimension,
    reduced_homology_dims, regularity, stanley_reisner, terai_check, FieldSpec, Oracle,
    SimplicialComplex,
};
use path_ideals::splitting::{
    colon_descriptions, connected_ideal, is_vertex_splittable, path_ideal, split_at,
    three_path_splitting,
};
use path_ideals::verify::{self, Instance, Verdict};
use path_ideals::{FamilySpec, Graph, Hypergraph, SquareFreeIdeal};

const F: FieldSpec = FieldSpec::GF2;

fn g(labels: &[&str], edges: &[(&str, &str)]) -> Graph {
    Graph::new(labels, edges).unwrap()
}

fn fam(s: &str) -> Graph {
    make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
}

fn ideal(vars: &[&str], gens: &[&[&str]]) -> SquareFreeIdeal {
    let gens: Vec<Vec<&str>> = gens.iter().map(|g| g.to_vec()).collect();
    SquareFreeIdeal::new(vars, &gens).unwrap()
}

fn hyper(vars: &[&str], edges: &[&[&str]]) -> Hypergraph {
    let edges: Vec<Vec<&str>> = edges.iter().map(|e| e.to_vec()).collect();
    Hypergraph::new(vars, &edges).unwrap()
}

fn edge_sets(h: &Hypergraph) -> BTreeSet<Vec<String>> {
    h.edge_labels().into_iter().collect()
}

fn sets(items: &[&[&str]]) -> BTreeSet<Vec<String>> {
    items
        .iter()
        .map(|e| {
            let mut v: Vec<String> = e.iter().map(|s| s.to_string()).collect();
            v.sort();
            v
        })
        .collect()
}

fn p3() -> Graph {
    g(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
}

fn c4() -> Graph {
    fam("cycle:4")
}

#[test]
fn build_graph() {
    let p = p3();
    assert_eq!(p.edge_count(), 2);
    assert!(p.is_tree());
    let a = g(&["a"], &[]);
    assert_eq!((a.n(), a.edge_count()), (1, 0));
    let e = g(&["a", "b"], &[("a", "b"), ("b", "a")]);
    assert_eq!(e.edge_count(), 1);
    assert!(Graph::new(&["a", "a"], &[]).is_err());
    assert!(Graph::new(&["a"], &[("a", "a")]).is_err());
}

#[test]
fn closed_neighborhood() {
    let p = p3();
    assert_eq!(p.closed_neighborhood(&["b"]).unwrap(), ["a", "b", "c"]);
    assert_eq!(p.closed_neighborhood(&["a", "c"]).unwrap(), ["a", "b", "c"]);
    let s = g(&["w", "v1", "v2", "v3"], &[("w", "v1"), ("w", "v2"), ("w", "v3")]);
    assert_eq!(s.closed_neighborhood(&["v1"]).unwrap(), ["v1", "w"]);
}

#[test]
fn graph_surgery() {
    let d = p3().delete_vertices(&["b"]).unwrap();
    assert_eq!((d.n(), d.edge_count()), (2, 0));
    let tri = g(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
    let e = tri.delete_edges(&[("a", "b")]).unwrap();
    assert_eq!(e, g(&["a", "b", "c"], &[("a", "c"), ("c", "b")]));
    let k4 = fam("complete:4");
    let k3 = k4.induced_subgraph(&["x1", "x3", "x4"]).unwrap();
    assert_eq!(k3.edge_count(), 3);
}

#[test]
fn chordality() {
    let (ok, peo) = fam("complete:5").is_chordal();
    assert!(ok && peo.unwrap().len() == 5);
    assert!(!c4().chordal());
    for n in 1..=9 {
        assert!(enumerate_trees(n).unwrap().iter().all(Graph::chordal));
    }
    assert!((0..50).all(|s| random_tree(10, s).unwrap().chordal()));
}

#[test]
fn simplicial_vertices() {
    assert_eq!(p3().simplicial_vertices(), ["a", "c"]);
    assert_eq!(fam("complete:4").simplicial_vertices().len(), 4);
    assert!(c4().simplicial_vertices().is_empty());
}

#[test]
fn dominated_pairs() {
    let p = p3();
    let named: BTreeSet<(String, String)> = p
        .dominated_pairs()
        .into_iter()
        .map(|(x, y)| (p.label(x).to_string(), p.label(y).to_string()))
        .collect();
    let want: BTreeSet<(String, String)> =
        [("a", "b"), ("c", "b")].iter().map(|(x, y)| (x.to_string(), y.to_string())).collect();
    assert_eq!(named, want);
    assert_eq!(fam("complete:3").dominated_pairs().len(), 6);
    assert!(c4().dominated_pairs().is_empty());
}

#[test]
fn caterpillars() {
    assert!(fam("star:5").is_caterpillar());
    assert!((1..=9).all(|n| fam(&format!("path:{n}")).is_caterpillar()));
    let spider = g(
        &["c", "a1", "a2", "b1", "b2", "d1", "d2"],
        &[("c", "a1"), ("a1", "a2"), ("c", "b1"), ("b1", "b2"), ("c", "d1"), ("d1", "d2")],
    );
    assert!(spider.is_tree() && !spider.is_caterpillar());
}

#[test]
fn families() {
    let tt = fam("Tt:4,2,2");
    let want = g(
        &["x1", "x2", "y1", "y2", "z1", "z2"],
        &[("x1", "x2"), ("x1", "y1"), ("x1", "y2"), ("x2", "z1"), ("x2", "z2")],
    );
    assert_eq!(tt, want);
    let tp = fam("Tprime:4,2");
    let want = g(
        &["x1", "x2", "w11", "w12", "w21", "w22"],
        &[("x1", "x2"), ("x2", "w11"), ("w11", "w12"), ("x2", "w21"), ("w21", "w22")],
    );
    assert_eq!(tp, want);
    let gt = fam("Gt:3");
    let want = g(
        &["x1", "x2", "x3", "x4", "a", "b"],
        &[("x1", "x2"), ("x2", "a"), ("x2", "b"), ("a", "b"), ("a", "x3"), ("b", "x3"), ("x3", "x4")],
    );
    assert_eq!(gt, want);
}

#[test]
fn tree_enumeration_and_random_graphs() {
    let four = enumerate_trees(4).unwrap();
    assert_eq!(four.len(), 2);
    assert!(four.iter().any(|t| t.is_caterpillar() && t.degree(0).max(t.degree(1)) <= 3));
    assert_eq!(enumerate_trees(1).unwrap().len(), 1);
    assert_eq!(enumerate_trees(1).unwrap()[0].n(), 1);
    for seed in 0..50 {
        let a = random_chordal(11, seed).unwrap();
        assert!(a.chordal());
        assert_eq!(a, random_chordal(11, seed).unwrap());
    }
}

#[test]
fn path_hypergraphs() {
    let p4 = fam("path:4");
    assert_eq!(
        edge_sets(&path_hypergraph(&p4, 3).unwrap()),
        sets(&[&["x1", "x2", "x3"], &["x2", "x3", "x4"]])
    );
    assert_eq!(path_hypergraph(&fam("complete:3"), 3).unwrap().edges().len(), 1);
    let star = fam("star:4");
    assert_eq!(
        edge_sets(&path_hypergraph(&star, 3).unwrap()),
        sets(&[&["w", "v1", "v2"], &["w", "v1", "v3"], &["w", "v2", "v3"]])
    );
}

#[test]
fn connected_hypergraphs() {
    assert_eq!(
        edge_sets(&connected_hypergraph(&fam("star:4"), 4).unwrap()),
        sets(&[&["w", "v1", "v2", "v3"]])
    );
    for s in 0..40 {
        let gr = random_chordal(9, s).unwrap();
        assert_eq!(connected_hypergraph(&gr, 3).unwrap(), path_hypergraph(&gr, 3).unwrap());
    }
    assert_eq!(
        edge_sets(&connected_hypergraph(&fam("path:5"), 4).unwrap()),
        sets(&[&["x1", "x2", "x3", "x4"], &["x2", "x3", "x4", "x5"]])
    );
}

#[test]
fn independence_complexes() {
    let k3 = independence_complex(&fam("complete:3"), 1).unwrap();
    assert_eq!(k3.facet_labels().len(), 3);
    assert!(k3.facet_labels().iter().all(|f| f.len() == 1));
    let ind = independence_complex(&p3(), 2).unwrap();
    let facets: BTreeSet<Vec<String>> = ind.facet_labels().into_iter().collect();
    assert_eq!(facets, sets(&[&["a", "b"], &["b", "c"], &["a", "c"]]));
    for t in enumerate_trees_up_to(8).unwrap() {
        assert!(is_vertex_decomposable(&independence_complex(&t, 2).unwrap()).unwrap());
    }
}

#[test]
fn minimal_covers() {
    let h = hyper(&["x", "y", "z"], &[&["x", "y", "z"]]);
    assert_eq!(minimal_vertex_covers(&h).unwrap().len(), 3);
    let p = path_hypergraph(&fam("path:4"), 3).unwrap();
    let covers: BTreeSet<Vec<String>> =
        minimal_vertex_covers(&p).unwrap().into_iter().map(|c| p.labels_of(c)).collect();
    assert_eq!(covers, sets(&[&["x2"], &["x3"], &["x1", "x4"]]));
    let tt = path_hypergraph(&fam("Tt:4,2,2"), 4).unwrap();
    let mut sizes: Vec<u32> =
        minimal_vertex_covers(&tt).unwrap().iter().map(|c| c.count_ones()).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 1, 2, 2]);
    assert_eq!(height_bight(&tt).unwrap().1, 2);
}

#[test]
fn heights() {
    assert_eq!(height_bight(&path_hypergraph(&fam("complete:5"), 3).unwrap()).unwrap().1, 3);
    let h = hyper(&["x", "y", "z"], &[&["x", "y", "z"]]);
    assert_eq!(height_bight(&h).unwrap(), (1, 1));
    let tt = path_hypergraph(&fam("Tt:4,3,3"), 4).unwrap();
    assert_eq!(height_bight(&tt).unwrap().1, 3);
}

#[test]
fn dual_hypergraphs() {
    let h = hyper(&["x", "y", "z"], &[&["x", "y", "z"]]);
    assert_eq!(edge_sets(&dual_hypergraph(&h).unwrap()), sets(&[&["x"], &["y"], &["z"]]));
    for s in 0..200 {
        let gr = random_chordal(10, s).unwrap();
        let p = path_hypergraph(&gr, 3).unwrap();
        assert_eq!(dual_hypergraph(&dual_hypergraph(&p).unwrap()).unwrap(), p);
    }
    for (n, m) in [(2, 2), (3, 3), (4, 2)] {
        let p = path_hypergraph(&fam(&format!("Tt:4,{n},{m}")), 4).unwrap();
        let ys: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
        let zs: Vec<String> = (1..=m).map(|i| format!("z{i}")).collect();
        let mut want: BTreeSet<Vec<String>> = BTreeSet::new();
        want.insert(vec!["x1".into()]);
        want.insert(vec!["x2".into()]);
        want.insert(ys);
        want.insert(zs);
        assert_eq!(edge_sets(&dual_hypergraph(&p).unwrap()), want);
    }
}

#[test]
fn hypergraph_vertex_deletion() {
    let h = hyper(&["x", "y", "z"], &[&["x", "y"], &["y", "z"]]);
    let d = delete_vertices_hypergraph(&h, &["y"]).unwrap();
    assert!(d.is_edgeless() && d.n() == 2);
    assert_eq!(delete_vertices_hypergraph(&h, &[] as &[&str]).unwrap(), h);
    // recorded observation: P_3(T) ∖ v = P_3(T ∖ v) on small trees
    for t in enumerate_trees_up_to(8).unwrap() {
        let p = path_hypergraph(&t, 3).unwrap();
        for v in t.labels() {
            let lhs = delete_vertices_hypergraph(&p, &[v]).unwrap();
            let rhs = path_hypergraph(&t.delete_vertices(&[v]).unwrap(), 3).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn induced_matchings() {
    let h = hyper(&["x", "y", "z"], &[&["x", "y", "z"]]);
    assert_eq!(max_induced_matching(&h).unwrap().0, 1);
    let p7 = path_hypergraph(&fam("path:7"), 3).unwrap();
    let (nu, w) = max_induced_matching(&p7).unwrap();
    assert_eq!(nu, 2);
    assert_eq!(w.size, 2);
    assert!(w.edges.contains(&vec!["x1".into(), "x2".into(), "x3".into()]));
    assert!(w.edges.contains(&vec!["x5".into(), "x6".into(), "x7".into()]));
    for (t, k) in [(4, 1), (4, 3), (5, 2), (6, 2)] {
        assert_eq!(nu_t(&fam(&format!("Tprime:{t},{k}")), t).unwrap(), 1);
    }
}

#[test]
fn nu_t_examples() {
    assert_eq!(nu_t(&fam("complete:4"), 3).unwrap(), 1);
    assert_eq!(nu_t(&fam("path:4"), 3).unwrap(), 1);
    for s in 0..30 {
        let a = random_chordal(6, s).unwrap().relabeled("a");
        let b = random_chordal(5, s + 1000).unwrap().relabeled("b");
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(nu_t(&u, 3).unwrap(), nu_t(&a, 3).unwrap() + nu_t(&b, 3).unwrap());
    }
}

#[test]
fn ideal_of_hypergraph() {
    let i = path_ideal(&fam("path:4"), 3).unwrap();
    assert_eq!(i.to_string(), "<x1*x2*x3, x2*x3*x4>");
    let z = SquareFreeIdeal::zero(vec!["x".into(), "y".into()]);
    assert!(z.hypergraph().is_edgeless());
    for s in 0..300 {
        let gr = random_chordal(9, s).unwrap();
        let p = path_hypergraph(&gr, 3).unwrap();
        assert_eq!(SquareFreeIdeal::of(&p).hypergraph(), &p);
    }
}

#[test]
fn minimalize_examples() {
    // masks over x = bit 0, y = bit 1, z = bit 2
    assert_eq!(minimalize(&[0b001, 0b011]), [0b001]);
    assert_eq!(minimalize(&[0, 0b001]), [0]);
    assert_eq!(minimalize(&[0b011, 0b110, 0b011]), [0b011, 0b110]);
}

#[test]
fn ideal_operations() {
    let xyz = ideal(&["x", "y", "z"], &[&["x", "y", "z"]]);
    assert!(xyz.colon_by(&["x"]).unwrap().same_ideal(&ideal(&["x", "y", "z"], &[&["y", "z"]])));
    for k in 1..=4 {
        let tp = fam(&format!("Tprime:4,{k}"));
        let c = path_ideal(&tp, 4).unwrap().colon_by(&["x1", "x2"]).unwrap();
        let gens: Vec<Vec<String>> =
            (1..=k).map(|j| vec![format!("w{j}1"), format!("w{j}2")]).collect();
        let want = SquareFreeIdeal::new(tp.labels(), &gens).unwrap();
        assert!(c.same_ideal(&want), "k = {k}: {c}");
    }
    for s in 0..200 {
        let r = verify::run_identity("colon-comma", s, &Oracle::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "seed {s}");
    }
}

#[test]
fn alexander_duals() {
    let xyz = ideal(&["x", "y", "z"], &[&["x", "y", "z"]]);
    let d = xyz.alexander_dual().unwrap();
    assert!(d.same_ideal(&ideal(&["x", "y", "z"], &[&["x"], &["y"], &["z"]])));
    let tt = fam("Tt:4,3,2");
    let d = path_ideal(&tt, 4).unwrap().alexander_dual().unwrap();
    let vars: Vec<&str> = tt.labels().iter().map(String::as_str).collect();
    let want = ideal(&vars, &[&["x1"], &["x2"], &["y1", "y2", "y3"], &["z1", "z2"]]);
    assert!(d.same_ideal(&want));
    for s in 0..200 {
        let r = verify::run_identity("dual-colon", s, &Oracle::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "seed {s}");
    }
}

#[test]
fn three_path_splittings() {
    let star = g(&["w", "v1", "v2"], &[("w", "v1"), ("w", "v2")]);
    let s = three_path_splitting(&star, star.index_of("v1").unwrap(), star.index_of("w").unwrap()).unwrap();
    assert_eq!(s.j.to_string(), "<v1*v2*w>");
    assert!(s.k.is_zero() && s.l.is_zero());

    let p = g(&["x", "y", "w", "u"], &[("x", "y"), ("y", "w"), ("w", "u")]);
    let (x, y) = (p.index_of("x").unwrap(), p.index_of("y").unwrap());
    let s = three_path_splitting(&p, x, y).unwrap();
    let vars = ["u", "w", "x", "y"];
    assert!(s.j.same_ideal(&ideal(&vars, &[&["x", "y", "w"]])));
    assert!(s.k.same_ideal(&ideal(&vars, &[&["y", "w", "u"]])));
    assert!(s.j.intersect(&s.k).same_ideal(&ideal(&vars, &[&["x", "y", "w", "u"]])));
    assert!(s.l.same_ideal(&ideal(&vars, &[&["w", "u"]])));
    let w = colon_descriptions(&p, &s).unwrap();
    let at_w = w.iter().find(|d| d.w == "w").unwrap();
    assert!(at_w.holds());
    assert!(at_w.computed.same_ideal(&ideal(&vars, &[&["u"]])));

    let c = verify::SuiteConfig { exhaustive: 7, random: 60, n: 10, ..Default::default() };
    for gr in verify::chordal_corpus(&c).unwrap() {
        let i = path_ideal(&gr.graph, 3).unwrap();
        for (x, y) in gr.graph.dominated_pairs() {
            let s = three_path_splitting(&gr.graph, x, y).unwrap();
            assert!(s.j.sum(&s.k).same_ideal(&i), "{}", gr.description);
        }
    }
}

#[test]
fn vertex_splittability() {
    let vars = ["x", "y", "z"];
    for i in [
        ideal(&vars, &[&["x", "y"]]),
        SquareFreeIdeal::zero(vars.iter().map(|s| s.to_string()).collect()),
        SquareFreeIdeal::unit(vars.iter().map(|s| s.to_string()).collect()),
    ] {
        assert!(is_vertex_splittable(&i).unwrap().0, "{i}");
    }
    for t in enumerate_trees_up_to(9).unwrap() {
        let d = path_ideal(&t, 3).unwrap().alexander_dual().unwrap();
        let (ok, cert) = is_vertex_splittable(&d).unwrap();
        assert!(ok);
        assert!(cert.unwrap().replay(&d).unwrap().same_ideal(&d));
    }
    for t in 3..=5 {
        let d = path_ideal(&fam(&format!("Gt:{t}")), t).unwrap().alexander_dual().unwrap();
        assert!(!is_vertex_splittable(&d).unwrap().0);
    }
}

#[test]
fn squarefree_components() {
    let xy = ideal(&["x", "y", "z"], &[&["x", "y"]]);
    assert!(xy.squarefree_component(3).same_ideal(&ideal(&["x", "y", "z"], &[&["x", "y", "z"]])));
    let i = ideal(&["x", "y", "z", "w"], &[&["x", "y"], &["y", "z"], &["x", "z", "w"]]);
    assert!(i.squarefree_component(2).same_ideal(&ideal(&["x", "y", "z", "w"], &[&["x", "y"], &["y", "z"]])));
    assert!(ideal(&["x"], &[&["x"]]).squarefree_component(2).is_zero());
}

#[test]
fn componentwise_linearity() {
    let k = path_ideal(&fam("complete:5"), 3).unwrap();
    assert!(has_linear_resolution(&k, F).unwrap());
    assert!(is_componentwise_linear(&k, F).unwrap());
    for t in enumerate_trees_up_to(8).unwrap() {
        let d = path_ideal(&t, 3).unwrap().alexander_dual().unwrap();
        assert!(is_componentwise_linear(&d, F).unwrap());
    }
    for t in [3, 4] {
        let d = path_ideal(&fam(&format!("Gt:{t}")), t).unwrap().alexander_dual().unwrap();
        assert!(!is_componentwise_linear(&d, F).unwrap());
    }
}

#[test]
fn stanley_reisner_complexes() {
    let xy = ideal(&["x", "y"], &[&["x", "y"]]);
    let d = stanley_reisner(&xy).unwrap();
    let facets: BTreeSet<Vec<String>> = d.facet_labels().into_iter().collect();
    assert_eq!(facets, sets(&[&["x"], &["y"]]));
    let z = stanley_reisner(&SquareFreeIdeal::zero(vec!["x".into(), "y".into()])).unwrap();
    assert_eq!(z.facet_labels(), [vec!["x".to_string(), "y".to_string()]]);
    for s in 0..60 {
        let gr = random_chordal(9, s).unwrap();
        let a = stanley_reisner(&path_ideal(&gr, 3).unwrap()).unwrap();
        assert_eq!(a, independence_complex(&gr, 2).unwrap());
    }
    // for t = 4 the complex Ind_3(T) matches the connected ideal
    for t in enumerate_trees_up_to(8).unwrap() {
        let a = stanley_reisner(&connected_ideal(&t, 4).unwrap()).unwrap();
        assert_eq!(a, independence_complex(&t, 3).unwrap());
    }
}

#[test]
fn reduced_homology() {
    let circle = SimplicialComplex::new(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap();
    let h = reduced_homology_dims(&circle, F).unwrap();
    assert_eq!(h.into_iter().collect::<Vec<_>>(), [(1, 1)]);
    let simplex = SimplicialComplex::simplex(vec!["a".into(), "b".into(), "c".into()]);
    assert!(reduced_homology_dims(&simplex, F).unwrap().is_empty());
    let two = SimplicialComplex::new(&["a", "b"], &[vec!["a"], vec!["b"]]).unwrap();
    assert_eq!(reduced_homology_dims(&two, F).unwrap().into_iter().collect::<Vec<_>>(), [(0, 1)]);
}

#[test]
fn betti_tables() {
    let xyz = ideal(&["x", "y", "z"], &[&["x", "y", "z"]]);
    let b = betti_table(&xyz, F).unwrap();
    assert_eq!(b.entries().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(), [((0, 0), 1), ((1, 3), 1)]);
    let p = betti_table(&path_ideal(&fam("path:4"), 3).unwrap(), F).unwrap();
    assert_eq!(
        p.entries().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(),
        [((0, 0), 1), ((1, 3), 2), ((2, 4), 1)]
    );
    let k4 = betti_table(&path_ideal(&fam("complete:4"), 3).unwrap(), F).unwrap();
    assert!(k4.entries().keys().all(|&(i, j)| i == 0 || j - i == 2));
}

#[test]
fn regularity_and_pd() {
    let k5 = path_ideal(&fam("complete:5"), 3).unwrap();
    assert_eq!((regularity(&k5, F).unwrap(), projective_dimension(&k5, F).unwrap()), (2, 3));
    assert_eq!(regularity(&path_ideal(&fam("cycle:5"), 3).unwrap(), F).unwrap(), 2);
    let xy = ideal(&["x", "y"], &[&["x", "y"]]);
    assert_eq!((regularity(&xy, F).unwrap(), projective_dimension(&xy, F).unwrap()), (1, 1));
}

#[test]
fn cm_reports() {
    let r = cm_report(&ideal(&["x", "y", "z"], &[&["x", "y", "z"]]), F).unwrap();
    assert!(r.cm && r.unmixed);
    let r = cm_report(&path_ideal(&fam("complete:5"), 3).unwrap(), F).unwrap();
    assert_eq!((r.ht, r.bight, r.pd, r.cm), (3, 3, 3, true));
    let r = cm_report(&path_ideal(&fam("Tt:4,3,2"), 4).unwrap(), F).unwrap();
    assert_eq!((r.pd, r.bight, r.cm), (4, 3, false));
}

#[test]
fn linear_resolutions() {
    assert!(has_linear_resolution(&path_ideal(&fam("cycle:5"), 3).unwrap(), F).unwrap());
    for n in 3..=7 {
        assert!(has_linear_resolution(&path_ideal(&fam(&format!("complete:{n}")), 3).unwrap(), F).unwrap());
    }
    // I_3(P_5) = <x1x2x3, x2x3x4, x3x4x5>: the Hilbert numerator
    // 1 - 3t^3 + 2t^4 leaves no room for a nonlinear strand.
    let p5 = path_ideal(&fam("path:5"), 3).unwrap();
    assert!(has_linear_resolution(&p5, F).unwrap());
    let p5t = betti_table(&p5, F).unwrap();
    assert_eq!(
        p5t.entries().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(),
        [((0, 0), 1), ((1, 3), 3), ((2, 4), 2)]
    );
    // two induced 3-paths force reg(R/I) = 4 > 2 on P_7
    let p7 = path_ideal(&fam("path:7"), 3).unwrap();
    assert_eq!(nu_t(&fam("path:7"), 3).unwrap(), 2);
    assert!(!has_linear_resolution(&p7, F).unwrap());
}

#[test]
fn terai() {
    let xyz = ideal(&["x", "y", "z"], &[&["x", "y", "z"]]);
    assert_eq!(projective_dimension(&xyz, F).unwrap(), 1);
    assert!(terai_check(&xyz, F).unwrap());
    let tt = path_ideal(&fam("Tt:4,3,3"), 4).unwrap();
    let d = tt.alexander_dual().unwrap();
    assert_eq!(d.to_string(), "<x1, x2, y1*y2*y3, z1*z2*z3>");
    // reg(I^dual) = reg(R/I^dual) + 1
    assert_eq!(projective_dimension(&tt, F).unwrap(), 5);
    assert_eq!(regularity(&d, F).unwrap() + 1, 5);
    assert!(terai_check(&tt, F).unwrap());
}

#[test]
fn vertex_decomposability() {
    let simplex = SimplicialComplex::simplex(vec!["a".into(), "b".into(), "c".into()]);
    assert!(is_vertex_decomposable(&simplex).unwrap());
    for t in enumerate_trees_up_to(9).unwrap() {
        assert!(is_vertex_decomposable(&independence_complex(&t, 2).unwrap()).unwrap());
    }
    let gt = stanley_reisner(&path_ideal(&fam("Gt:3"), 3).unwrap()).unwrap();
    assert!(!is_vertex_decomposable_dual(&gt).unwrap());
    assert!(!oracle::is_vertex_decomposable_shedding(&gt));
}

fn inst(d: &str, gr: &Graph, t: usize) -> Instance {
    Instance::of_graph(d, gr, Some(t), F)
}

#[test]
fn theorem_checks_on_named_graphs() {
    let o = Oracle::default();
    let k4 = fam("complete:4");
    let r = verify::check_chordal_reg(&k4, &o, inst("K4", &k4, 3)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.computed["reg"], 2);
    let k5 = fam("complete:5");
    let r = verify::check_chordal_pd(&k5, &o, inst("K5", &k5, 3)).unwrap();
    assert_eq!((r.verdict, r.computed["pd"].clone()), (Verdict::Pass, 3.into()));
    let p = fam("path:3");
    let r = verify::check_cm_iff_unmixed(&p, &o, inst("P3", &p, 3)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.computed["cm"], true);
    // non-chordal input is rejected
    assert!(verify::check_chordal_reg(&c4(), &o, inst("C4", &c4(), 3)).is_err());
}

#[test]
fn tree_dual_checks() {
    for m in 2..=6 {
        let s = fam(&format!("star:{m}"));
        let r = verify::check_tree_dual_vs(&s, inst("star", &s, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let d = path_ideal(&s, 3).unwrap().alexander_dual().unwrap();
        if !d.gens().is_empty() && d.gens().len() > 1 {
            let c = split_at(&d, "w").unwrap().expect("the center is a splitting vertex");
            assert_eq!(c.root_variable(), Some("w"));
        }
    }
    let p4 = fam("path:4");
    let r = verify::check_tree_dual_vs(&p4, inst("P4", &p4, 3)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(path_ideal(&p4, 3).unwrap().alexander_dual().unwrap().to_string(), "<x2, x3, x1*x4>");
}

#[test]
fn caterpillar_checks() {
    let o = Oracle::default();
    let p7 = fam("path:7");
    let r = verify::check_caterpillar_reg(&p7, 4, &o, inst("P7", &p7, 4)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.computed["reg"], 3);
    let p4 = fam("path:4");
    assert!(path_ideal(&p4, 6).unwrap().is_zero());
    let r = verify::check_caterpillar_reg(&p4, 6, &o, inst("P4", &p4, 6)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.computed["reg"], 0);
}

#[test]
fn splitting_checks() {
    let p = g(&["x", "y", "w", "u"], &[("x", "y"), ("y", "w"), ("w", "u")]);
    assert_eq!(verify::check_splitting_and_monotonicity(&p, inst("P4", &p, 3)).unwrap().verdict, Verdict::Pass);
    let r = verify::check_splitting_and_monotonicity(&c4(), inst("C4", &c4(), 3)).unwrap();
    assert_eq!(r.verdict, Verdict::Skipped);
}

#[test]
fn family_checks() {
    let o = Oracle::default();
    let r = verify::check_family_tprime(4, 4, &o).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.computed["reg"].as_u64().unwrap() >= 4);
    assert_eq!(nu_t(&fam("Tprime:5,5"), 5).unwrap(), 1);
    for t in [3, 4] {
        let r = verify::check_family_gt(t, &o).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.computed["pd"], 3);
    }
    let gt = fam("Gt:3");
    let p = path_hypergraph(&gt, 3).unwrap();
    let witness = p.vertex_set(&["x2", "a", "x4"]).unwrap();
    assert!(minimal_vertex_covers(&p).unwrap().contains(&witness));
    for (t, n, m, pd, bight) in [(4, 3, 3, 5, 3), (4, 2, 2, 3, 2), (5, 4, 2, 5, 4)] {
        let r = verify::check_family_tt(t, n, m, &o).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!((r.computed["pd"].clone(), r.computed["bight"].clone()), (pd.into(), bight.into()));
    }
}

#[test]
fn conjecture_probes() {
    let o = Oracle::default();
    let tp = fam("Tprime:4,3");
    let r = verify::probe_conjectures(&tp, 4, &o, inst("Tprime:4,3", &tp, 4)).unwrap();
    assert!(r.is_probe());
    assert_eq!(r.computed["reg"], 3);
    assert_eq!(r.computed["reg"], r.expected["reg"]);
    for t in enumerate_trees_up_to(8).unwrap() {
        let r = verify::probe_conjectures(&t, 3, &o, inst("tree", &t, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }
}
