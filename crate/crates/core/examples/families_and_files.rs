//! Named families, tree enumeration, the text formats and the on-disk
//! oracle cache.

use path_ideals::families::{enumerate_trees, make_family, random_caterpillar, random_chordal, random_tree};
use path_ideals::oracle::{DiskCache, Oracle};
use path_ideals::splitting::path_ideal;
use path_ideals::{FamilySpec, Graph, SquareFreeIdeal};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in ["path:5", "cycle:5", "star:4", "complete:4", "caterpillar:2,0,1", "Tprime:4,2", "Gt:3", "Gtprime:3", "Tt:4,2,3"] {
        let spec: FamilySpec = spec.parse()?;
        let g = make_family(&spec)?;
        println!("{:<18} {g:?}", spec.to_string());
    }

    println!();
    for n in 1..=9 {
        print!("{} ", enumerate_trees(n)?.len());
    }
    println!("unlabeled trees on 1..=9 vertices");
    println!("random tree        {:?}", random_tree(7, 1)?);
    println!("random chordal     {:?}", random_chordal(7, 1)?);
    println!("random caterpillar {:?}", random_caterpillar(9, 1)?);

    let g = make_family(&FamilySpec::gt(3))?;
    let text = g.to_text();
    println!("\n{text}");
    assert_eq!(Graph::from_text(&text)?, g);
    let i = path_ideal(&g, 3)?;
    let itext = i.to_text();
    println!("{itext}");
    assert!(SquareFreeIdeal::from_text(&itext)?.same_ideal(&i));

    let dir = std::env::temp_dir().join("path-ideals-cache-example");
    std::fs::create_dir_all(&dir)?;
    let o = Oracle::default().with_cache(DiskCache::open(&dir));
    let first = o.betti(&i)?;
    let again = o.betti(&i)?;
    assert_eq!(first, again);
    println!("cached Betti table under {}", dir.display());
    Ok(())
}
