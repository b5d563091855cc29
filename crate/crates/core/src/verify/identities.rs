//! Seeded identity and inequality checks on random ideals and graphs. Each
//! instance is regenerated from `(id, seed)` alone.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::bits::{self, bit, ones, Mask};
use crate::error::{Error, Result};
use crate::families::random_tree;
use crate::graph::Graph;
use crate::hypergraph::{height_bight, nu_t, Hypergraph};
use crate::ideal::SquareFreeIdeal;
use crate::oracle::{FieldSpec, Oracle};
use crate::splitting::{is_vertex_splittable, path_ideal, splitting_variable_decomposition};

use super::{run_check, CheckResult, Instance};

/// Identity checks runnable from a seed.
pub const IDENTITY_IDS: [&str; 8] = [
    "dual-involution",
    "lemma-bounds",
    "colon-comma",
    "dual-colon",
    "splitting-variable",
    "cover-deletion-dual",
    "vs-product",
    "vs-deletion",
];

fn rng_for(id: &str, seed: u64) -> ChaCha8Rng {
    let salt = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    });
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i:02}")).collect()
}

/// A random antichain on `n` vertices with up to `m` edges of size
/// `1..=max_size` (before minimalisation).
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize, max_size: usize) -> Hypergraph {
    let count = rng.gen_range(1..=m);
    let edges: Vec<Mask> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(n));
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            vs[..size].iter().fold(0, |a, &v| a | bit(v))
        })
        .collect();
    Hypergraph::from_masks(labels(n), edges)
}

/// `G(n, p)` with labels `x01..`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut adj = vec![0 as Mask; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
        }
    }
    Graph::from_parts(labels(n), adj)
}

fn pick_subset(rng: &mut ChaCha8Rng, from: Mask, k: usize) -> Vec<usize> {
    let mut vs: Vec<usize> = ones(from).collect();
    vs.shuffle(rng);
    vs.truncate(k);
    vs
}

fn mask_of(vs: &[usize]) -> Mask {
    vs.iter().fold(0, |a, &v| a | bit(v))
}

fn eq_json(a: &SquareFreeIdeal, b: &SquareFreeIdeal) -> (serde_json::Value, serde_json::Value, bool) {
    (json!(b.to_string()), json!(a.to_string()), a.same_ideal(b))
}

/// Runs identity check `id` on the instance generated from `seed`.
pub fn run_identity(id: &str, seed: u64, o: &Oracle) -> Result<CheckResult> {
    let mut rng = rng_for(id, seed);
    match id {
        "dual-involution" => {
            let n = rng.gen_range(1..=12);
            let h = match seed % 50 {
                0 => Hypergraph::edgeless(labels(n)),
                1 => Hypergraph::from_masks(labels(n), [0]),
                _ => random_hypergraph(&mut rng, n, 10, 5),
            };
            let i = SquareFreeIdeal::of(&h);
            run_check(id, Instance::of_seed("random antichain", i.to_text(), seed, o.field), || {
                let back = i.alexander_dual()?.alexander_dual()?;
                Ok(eq_json(&back, &i))
            })
        }
        "lemma-bounds" => {
            let n = rng.gen_range(4..=10);
            let p = rng.gen_range(0.2..0.6);
            let g = random_graph(&mut rng, n, p);
            let t = rng.gen_range(2..=4);
            let i = path_ideal(&g, t)?;
            let x = pick_subset(&mut rng, i.support(), 1);
            let mut gens = i.gens().to_vec();
            gens.shuffle(&mut rng);
            let cut = if gens.len() > 1 { rng.gen_range(1..gens.len()) } else { gens.len() };
            let inst = Instance::of_graph(format!("random G({n}, {p:.2})"), &g, Some(t), o.field)
                .with_seed(seed);
            run_check(id, inst, || {
                let mut violations = Vec::new();
                let b = o.betti(&i)?;
                let (reg, pd) = (b.regularity(), b.projective_dimension());
                let nu = nu_t(&g, t)?;
                let (_, bight) = height_bight(i.hypergraph())?;
                if reg < (t - 1) * nu {
                    violations.push(format!("reg {reg} < (t-1)ν_t = {}", (t - 1) * nu));
                }
                if pd < bight {
                    violations.push(format!("pd {pd} < bight {bight}"));
                }
                if let Some(&x) = x.first() {
                    let colon = o.betti(&i.colon(bit(x)))?;
                    let plus = o.betti(&i.plus_vars(bit(x)))?;
                    if reg > (colon.regularity() + 1).max(plus.regularity()) {
                        violations.push(format!("colon regularity bound fails at {}", g.label(x)));
                    }
                    if pd > colon.projective_dimension().max(plus.projective_dimension()) {
                        violations.push(format!("colon pd bound fails at {}", g.label(x)));
                    }
                }
                let j = SquareFreeIdeal::from_masks(i.vars().to_vec(), gens[..cut].iter().copied());
                let k = SquareFreeIdeal::from_masks(i.vars().to_vec(), gens[cut..].iter().copied());
                let (bj, bk, bjk) = (o.betti(&j)?, o.betti(&k)?, o.betti(&j.intersect(&k))?);
                let reg_bound = bj
                    .regularity()
                    .max(bk.regularity())
                    .max(bjk.regularity().saturating_sub(1));
                if reg > reg_bound {
                    violations.push("sum regularity bound fails".to_string());
                }
                let pd_bound = bj
                    .projective_dimension()
                    .max(bk.projective_dimension())
                    .max(bjk.projective_dimension() + 1);
                if pd > pd_bound {
                    violations.push("sum pd bound fails".to_string());
                }
                Ok((
                    json!({ "violations": [] }),
                    json!({ "reg": reg, "pd": pd, "nu": nu, "bight": bight, "violations": violations }),
                    violations.is_empty(),
                ))
            })
        }
        "colon-comma" => {
            let n = rng.gen_range(3..=10);
            let h = random_hypergraph(&mut rng, n, 8, 4);
            let i = SquareFreeIdeal::of(&h);
            let r = rng.gen_range(1..=3.min(n));
            let xs = pick_subset(&mut rng, bits::full(n), r);
            let a = mask_of(&xs[..r - 1]);
            let xr = bit(xs[r - 1]);
            let desc = format!("colon by {} with {} added", h.labels()[xs[r - 1]], h.labels_of(a).join(","));
            run_check(id, Instance::of_seed(desc, i.to_text(), seed, o.field), || {
                let lhs = i.colon(xr).plus_vars(a);
                let rhs = i.plus_vars(a).colon(xr);
                Ok(eq_json(&lhs, &rhs))
            })
        }
        "dual-colon" => {
            let n = rng.gen_range(3..=12);
            let h = random_hypergraph(&mut rng, n, 10, 4);
            let k = rng.gen_range(1..=3);
            let f = mask_of(&pick_subset(&mut rng, bits::full(n), k));
            let i = SquareFreeIdeal::of(&h);
            let desc = format!("f = {}", h.labels_of(f).join("*"));
            run_check(id, Instance::of_seed(desc, i.to_text(), seed, o.field), || {
                let lhs = i.alexander_dual()?.colon(f).alexander_dual()?;
                let rhs = SquareFreeIdeal::of(&h.without(f));
                Ok(eq_json(&lhs, &rhs))
            })
        }
        "splitting-variable" => {
            let n = rng.gen_range(3..=11);
            let h = random_hypergraph(&mut rng, n, 10, 4);
            let x = pick_subset(&mut rng, SquareFreeIdeal::of(&h).support(), 1)[0];
            let i = SquareFreeIdeal::of(&h);
            let desc = format!("x = {}", h.labels()[x]);
            run_check(id, Instance::of_seed(desc, i.to_text(), seed, o.field), || {
                let (h1, h2) = splitting_variable_decomposition(&h, x)?;
                let vars = h.labels().to_vec();
                let i1 = SquareFreeIdeal::of(&h1).extend_vars(&vars)?;
                let i2 = SquareFreeIdeal::of(&h2).extend_vars(&vars)?;
                let split = SquareFreeIdeal::from_masks(vars, i1.gens().iter().map(|&g| g | bit(x)))
                    .sum(&i2);
                let dual = i.alexander_dual()?;
                let mut ok = dual.same_ideal(&split);
                let condition = i1.contains(&i2);
                let mut conditional = serde_json::Value::Null;
                if condition {
                    let a = i1.same_ideal(&SquareFreeIdeal::of(&h.without(bit(x))).alexander_dual()?);
                    let b = i2.same_ideal(&i.colon(bit(x)).alexander_dual()?);
                    ok &= a && b;
                    conditional = json!({ "h1_is_deletion_dual": a, "h2_is_colon_dual": b });
                }
                Ok((
                    json!({ "decomposition": dual.to_string() }),
                    json!({
                        "decomposition": split.to_string(),
                        "i2_in_i1": condition,
                        "conditional": conditional,
                    }),
                    ok,
                ))
            })
        }
        "cover-deletion-dual" => {
            let n = rng.gen_range(3..=10);
            let h = random_hypergraph(&mut rng, n, 10, 4);
            let r = rng.gen_range(1..=3.min(n - 1));
            let xs = pick_subset(&mut rng, bits::full(n), r + 1);
            let f = mask_of(&xs[..r]);
            let last = bit(xs[r]);
            let i = SquareFreeIdeal::of(&h);
            let desc = format!("f = {}, deleted {}", h.labels_of(f).join("*"), h.labels()[xs[r]]);
            run_check(id, Instance::of_seed(desc, i.to_text(), seed, o.field), || {
                let lhs = i.colon(f).without_vars(last).alexander_dual()?;
                let h2_dual = i.without_vars(last).alexander_dual()?;
                let f_labels = h.labels_of(f);
                let rhs = h2_dual.without_vars(h2_dual.var_set(&f_labels)?);
                Ok(eq_json(&lhs, &rhs))
            })
        }
        "vs-product" => {
            let (n1, n2) = (rng.gen_range(3..=7), rng.gen_range(3..=7));
            let (s1, s2) = (rng.gen(), rng.gen());
            let t1 = random_tree(n1, s1)?.relabeled("a");
            let t2 = random_tree(n2, s2)?.relabeled("b");
            let d1 = path_ideal(&t1, 3)?.alexander_dual()?;
            let d2 = path_ideal(&t2, 3)?.alexander_dual()?;
            let product = d1.product(&d2);
            let desc = format!("tree duals ({n1} and {n2} vertices) on disjoint variables");
            run_check(id, Instance::of_seed(desc, product.to_text(), seed, o.field), || {
                let parts = is_vertex_splittable(&d1)?.0 && is_vertex_splittable(&d2)?.0;
                let (vs, _) = is_vertex_splittable(&product)?;
                Ok((
                    json!({ "vertex_splittable": true }),
                    json!({ "factors_vertex_splittable": parts, "vertex_splittable": vs }),
                    parts && vs,
                ))
            })
        }
        "vs-deletion" => {
            let tree_dual = |rng: &mut ChaCha8Rng| -> Result<SquareFreeIdeal> {
                let n = rng.gen_range(3..=9);
                path_ideal(&random_tree(n, rng.gen())?, 3)?.alexander_dual()
            };
            let (source, base) = if seed % 2 == 1 {
                let n = rng.gen_range(3..=9);
                let h = SquareFreeIdeal::of(&random_hypergraph(&mut rng, n, 8, 3));
                if is_vertex_splittable(&h)?.0 {
                    ("random vertex splittable ideal", h)
                } else {
                    ("tree dual", tree_dual(&mut rng)?)
                }
            } else {
                ("tree dual", tree_dual(&mut rng)?)
            };
            let a: Mask = (0..base.n()).filter(|_| rng.gen_bool(0.3)).fold(0, |m, v| m | bit(v));
            let desc = format!("{source}, deleting {}", base.hypergraph().labels_of(a).join(","));
            run_check(id, Instance::of_seed(desc, base.to_text(), seed, o.field), || {
                let base_vs = is_vertex_splittable(&base)?.0;
                let deleted = base.without_vars(a);
                let (vs, _) = is_vertex_splittable(&deleted)?;
                Ok((
                    json!({ "vertex_splittable": true }),
                    json!({ "base_vertex_splittable": base_vs, "deleted": deleted.to_string(), "vertex_splittable": vs }),
                    base_vs && vs,
                ))
            })
        }
        other => Err(Error::invalid("check id", format!("unknown check `{other}`"))),
    }
}

/// `pd(R/I) = reg(R/I^∨) + 1`.
pub fn check_terai(i: &SquareFreeIdeal, o: &Oracle, instance: Instance) -> Result<CheckResult> {
    run_check("terai", instance, || {
        if i.is_zero() || i.is_unit() {
            return Ok((json!({ "pd": 0 }), json!({ "pd": 0, "degenerate": true }), true));
        }
        let pd = o.pd(i)?;
        let reg_dual = o.reg(&i.alexander_dual()?)?;
        Ok((
            json!({ "pd": reg_dual + 1 }),
            json!({ "pd": pd, "reg_dual_quotient": reg_dual }),
            pd == reg_dual + 1,
        ))
    })
}

/// The chain `I^∨` vertex splittable ⇒ `I^∨` componentwise linear ⇒
/// `pd(R/I) = bight(I)`, each implication tested on `I` rather than assumed.
pub fn check_implication_chain(i: &SquareFreeIdeal, o: &Oracle, instance: Instance) -> Result<CheckResult> {
    run_check("implication-chain", instance, || {
        if i.is_zero() || i.is_unit() {
            return Ok((json!({ "chain": true }), json!({ "chain": true, "degenerate": true }), true));
        }
        let dual = i.alexander_dual()?;
        let vs = is_vertex_splittable(&dual)?.0;
        let cwl = o.componentwise_linear(&dual)?;
        let pd = o.pd(i)?;
        let (_, bight) = height_bight(i.hypergraph())?;
        let ok = (!vs || cwl) && (!cwl || pd == bight);
        Ok((
            json!({ "chain": true }),
            json!({ "chain": ok, "dual_vs": vs, "dual_cwl": cwl, "pd": pd, "bight": bight }),
            ok,
        ))
    })
}

/// Full Betti tables over GF(2) and the rationals coincide.
pub fn check_field_agreement(i: &SquareFreeIdeal, o: &Oracle, instance: Instance) -> Result<CheckResult> {
    run_check("field-agreement", instance, || {
        let gf2 = Oracle { field: FieldSpec::GF2, ..o.clone() }.betti(i)?;
        let q = Oracle { field: FieldSpec::Rational, ..o.clone() }.betti(i)?;
        let ok = gf2.entries() == q.entries();
        let summary = |b: &crate::oracle::BettiTable| {
            json!({ "reg": b.regularity(), "pd": b.projective_dimension(), "table": b.to_macaulay() })
        };
        Ok((json!({ "equal": true }), json!({ "equal": ok, "gf2": summary(&gf2), "rational": summary(&q) }), ok))
    })
}
