//! A surjection `h: A -> B` induces `M(h): M(A) -> M(B)` with
//! `M(h)(u) ∘ h = h ∘ u`; shown on two truncations of the squares chain.

use nilplab::morphism::InducedMultHom;
use nilplab::scenarios::{build_stage, functoriality_holds, projection};

fn main() -> nilplab::Result<()> {
    let stages = [6, 4, 3].map(|n| build_stage("xixi", n, 512));
    let [a, b, c] = stages;
    let (a, b, c) = (a?, b?, c?);
    let g = projection(&a, &b)?;
    let h = projection(&b, &c)?;
    let mg = InducedMultHom::new(&g)?;
    println!("dim M(A) = {}, M(g) surjective: {}", mg.domain_mult().dim(), mg.is_surjective()?);
    for (u, v) in mg.domain_mult().generators().iter().zip(mg.generator_images()?) {
        let ok = v.map().compose(g.map()) == g.map().compose(u.map());
        println!("  generator of rank {} intertwines: {ok}", u.matrix().rank());
    }
    println!("M(hg) = M(h) M(g): {}", functoriality_holds(&g, &h)?);
    Ok(())
}
