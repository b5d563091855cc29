//! The three families showing where the chordal and tree statements stop:
//! `T'_t` (regularity gap), `G_t` (pd = bight without componentwise
//! linearity) and `T_t` (pd far above bight).

use path_ideals::oracle::Oracle;
use path_ideals::verify::{self, CheckResult};

fn print(r: &CheckResult) {
    println!(
        "{:<14} {:<7} computed {}",
        r.instance.description,
        format!("{:?}", r.verdict).to_lowercase(),
        r.computed
    );
}

fn main() -> path_ideals::Result<()> {
    let o = Oracle::default();
    println!("T'_t: reg(R/I_t) >= k while nu_t = 1");
    for (t, k) in verify::TPRIME_CASES {
        print(&verify::check_family_tprime(t, k, &o)?);
    }
    println!("\nG_t: pd = 3 = bight, dual neither componentwise linear nor splittable");
    for t in verify::GT_CASES {
        print(&verify::check_family_gt(t, &o)?);
    }
    println!("\nT_t: pd = n + m - 1, bight = max(n, m)");
    for (t, n, m) in verify::TT_CASES {
        print(&verify::check_family_tt(t, n, m, &o)?);
    }
    Ok(())
}
