use homlie::algebra::*;
use homlie::constructions::*;
use homlie::homsolver::*;
use std::time::Instant;
fn main() {
    for l in ["sl2", "nonabelian2", "heisenberg"] {
        for (a, p) in [
            ("trunc_poly", 2),
            ("trunc_poly", 3),
            ("cyclic_group_alg", 2),
        ] {
            let t = Instant::now();
            let la = parse_algebra_name(l).unwrap();
            let aa = builtin(a, &[p]).unwrap();
            let big = tensor_lie(&aa, &la).unwrap();
            let d = solve_structures(&big, StructureKind::HomLie).unwrap().space;
            let f = assemble_tensor_formula(&aa, &la).unwrap().sum;
            let c = current_formula(&la, &aa).unwrap().sum;
            println!(
                "{l} x {a}{p}: direct {} asm {} cur {} eq {} {} incl {} {:?}",
                d.dim(),
                f.dim(),
                c.dim(),
                d == f,
                d == c,
                f.is_subspace_of(&d).unwrap(),
                t.elapsed()
            );
        }
    }
    let names = [
        "sl2",
        "sl3",
        "gl2",
        "so3",
        "so4",
        "sp2",
        "sp4",
        "heisenberg",
        "abelian2",
        "abelian3",
        "nonabelian2",
        "trunc_poly2",
        "trunc_poly3",
        "cyclic_group_alg2",
        "cyclic_group_alg3",
        "gl3",
        "so5",
    ];
    for n in names {
        let t = Instant::now();
        let a = match parse_algebra_name(n) {
            Ok(a) => a,
            Err(e) => {
                println!("{n}: {e}");
                continue;
            }
        };
        let hl = solve_structures(&a, StructureKind::HomLie).unwrap().space;
        let hc = solve_structures(&a, StructureKind::HomCycl).unwrap().space;
        let hn = solve_structures(&a, StructureKind::Hom2Nilp).unwrap().space;
        println!(
            "{n}: lie {} cyc {} nil {} identity {} {:?}",
            hl.dim(),
            hc.dim(),
            hn.dim(),
            hl.intersection(&hc).unwrap() == hn,
            t.elapsed()
        );
    }
}
