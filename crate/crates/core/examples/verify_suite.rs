//! A reduced verification campaign, written to JSON and CSV, followed by a
//! replay of every recorded result.

use path_ideals::verify::{self, SuiteConfig, Theorem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = SuiteConfig {
        theorems: vec![Theorem::ChordalReg, Theorem::TreeDualVs, Theorem::Splitting, Theorem::Families],
        exhaustive: 7,
        random: 30,
        n: 10,
        ..SuiteConfig::default()
    };
    let report = verify::run_suite(&config)?;
    for (id, c) in &report.summary.by_check {
        println!("{id:<24} pass {:>4}  fail {:>3}  skipped {:>3}", c.pass, c.fail, c.skipped);
    }
    println!("exit code {}", report.summary.exit_code);

    let dir = std::env::temp_dir().join("path-ideals-example");
    std::fs::create_dir_all(&dir)?;
    report.write_json(&dir.join("report.json"), true)?;
    report.write_csv(&dir.join("report.csv"))?;
    println!("wrote {}", dir.display());

    let o = config.oracle();
    let mut same = 0;
    for r in &report.results {
        if verify::replay(r, &o)?.verdict == r.verdict {
            same += 1;
        }
    }
    println!("replayed {same}/{} verdicts", report.results.len());
    Ok(())
}
