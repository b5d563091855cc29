//! Betti tables from Hochster's formula, over GF(2) and over the rationals.

use path_ideals::families::make_family;
use path_ideals::oracle::{betti_table, cm_report, terai_check, FieldSpec};
use path_ideals::splitting::path_ideal;
use path_ideals::{FamilySpec, SquareFreeIdeal};

fn show(name: &str, i: &SquareFreeIdeal, field: FieldSpec) -> path_ideals::Result<()> {
    let table = betti_table(i, field)?;
    let r = cm_report(i, field)?;
    println!("{name} = {i}");
    println!("{}", table.to_macaulay());
    println!(
        "reg {} pd {} depth {} dim {} | ht {} bight {} | cm {} linear {}",
        r.reg, r.pd, r.depth, r.dim, r.ht, r.bight, r.cm, r.linear_resolution
    );
    println!("Terai: {}\n", terai_check(i, field)?);
    Ok(())
}

fn main() -> path_ideals::Result<()> {
    let xyz = SquareFreeIdeal::new(&["x", "y", "z"], &[vec!["x", "y", "z"]])?;
    show("<xyz>", &xyz, FieldSpec::Rational)?;

    let p4 = make_family(&FamilySpec::path(4))?;
    show("I_3(P_4)", &path_ideal(&p4, 3)?, FieldSpec::GF2)?;

    let k5 = make_family(&FamilySpec::complete(5))?;
    show("I_3(K_5)", &path_ideal(&k5, 3)?, FieldSpec::GF2)?;

    let tt = make_family(&FamilySpec::tt(4, 3, 3))?;
    let i = path_ideal(&tt, 4)?;
    show("I_4(T_4(3,3))", &i, FieldSpec::GF2)?;
    show("its dual", &i.alexander_dual()?, FieldSpec::GF2)?;

    // a complex whose homology depends on the characteristic: the minimal
    // 6-vertex triangulation of the real projective plane
    let faces = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [2, 4, 6], [3, 5, 6],
    ];
    let vars: Vec<String> = (1..=6).map(|i| format!("v{i}")).collect();
    let rp2 = path_ideals::SimplicialComplex::new(
        &vars,
        &faces
            .iter()
            .map(|f| f.iter().map(|&v| vars[v - 1].clone()).collect())
            .collect::<Vec<Vec<String>>>(),
    )?;
    let i = path_ideals::oracle::sr_ideal(&rp2)?;
    for field in [FieldSpec::GF2, FieldSpec::Rational] {
        let b = betti_table(&i, field)?;
        println!("RP^2 Stanley-Reisner ideal over {field}: reg {} pd {}", b.regularity(), b.projective_dimension());
    }
    Ok(())
}
