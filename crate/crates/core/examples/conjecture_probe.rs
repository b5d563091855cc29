//! Probes `reg(R/J_t(T)) = (t-1) nu(H)` and `pd(R/J_t(T)) = bight(J_t(T))`
//! for the connected ideal `J_t` on small trees. Mismatches are candidate
//! counterexamples, not errors.

use path_ideals::families::enumerate_trees_up_to;
use path_ideals::oracle::{FieldSpec, Oracle};
use path_ideals::verify::{probe_conjectures, Instance, Verdict};

fn main() -> path_ideals::Result<()> {
    let t: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let n: usize = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(8);
    let o = Oracle::default();
    let mut counts = [0usize; 3];
    for (k, tree) in enumerate_trees_up_to(n)?.iter().enumerate() {
        let inst = Instance::of_graph(format!("tree #{k}"), tree, Some(t), FieldSpec::GF2);
        let r = probe_conjectures(tree, t, &o, inst)?;
        match r.verdict {
            Verdict::Pass => counts[0] += 1,
            Verdict::Fail => {
                counts[1] += 1;
                println!("candidate: {} {} expected {} computed {}", r.instance.description, tree.to_text().replace('\n', " "), r.expected, r.computed);
            }
            Verdict::Skipped => counts[2] += 1,
        }
    }
    println!("t = {t}, trees with n <= {n}: {} agree, {} differ, {} skipped", counts[0], counts[1], counts[2]);
    Ok(())
}
