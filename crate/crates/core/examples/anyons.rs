//! Finite anyons: the group algebra of Z/5 with an R-power twist.
use homq::catalog::groups;
use homq::cobraid::verify_cobraided;
use homq::ncpoly::{NCPoly, Word};

fn main() {
    for t in 1..=2 {
        let c = groups::anyon(5, 2, t, 6).unwrap();
        let f = c.h().pres().field().clone();
        let g = |n: usize| NCPoly::term(Word::from_vec(vec![0; n]), f.one());
        println!("t = {t}: {}", verify_cobraided(&c, 3).unwrap().summary());
        for a in 0..5 {
            let row: Vec<String> = (0..5).map(|b| c.eval(&g(a), &g(b)).unwrap().to_string()).collect();
            println!("  {}", row.join("  "));
        }
    }
}
