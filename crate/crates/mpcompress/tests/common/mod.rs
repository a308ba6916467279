#![allow(dead_code)]

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use mpcompress_core::testkit::generators::{gen_lower_star, inflate_with_local_pairs, rng};
use mpcompress_core::{ChainComplex, Grade, SparseColumn};
use rand::Rng;

pub const RUNNING_EXAMPLE: &str = "scc2020
# triangles ABC BCD CDE, edges AB AC BD CD BC CE DE, vertices A B C D E
2
3 7 5
2 1 ; 0 1 4
1 2 ; 2 3 4
2 2 ; 3 5 6
0 0 ; 0 1
0 0 ; 0 2
0 0 ; 1 3
0 0 ; 2 3
1 1 ; 1 2
2 2 ; 2 4
2 2 ; 3 4
0 0 ;
0 0 ;
0 0 ;
0 0 ;
2 0 ;
";

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_mpcompress")
}

/// Runs the binary with `args`, feeding `stdin`; `MPCOMPRESS_THREADS` is cleared unless
/// given in `env`.
pub fn run_cli(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(bin());
    cmd.args(args).env_remove("MPCOMPRESS_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

pub fn run_on_file(args: &[&str], input: &Path) -> Output {
    let mut full: Vec<&str> = args.to_vec();
    full.push(input.to_str().unwrap());
    run_cli(&full, "", &[])
}

/// A rank `r` spelled as the decimal `r/4 - 1` in one of several equivalent forms.
fn spell(r: u32, style: u32) -> String {
    let quarters = r as i64 - 4;
    let neg = quarters < 0;
    let a = quarters.unsigned_abs();
    let (int, frac) = (a / 4, (a % 4) * 25);
    let sign = if neg { "-" } else { "" };
    match style % 4 {
        0 if frac == 0 => format!("{sign}{int}"),
        0 => format!("{sign}{int}.{frac:02}"),
        1 => format!("{sign}{int}.{frac:02}0"),
        2 => format!("{sign}{}e-2", a * 25),
        _ if int == 0 && frac != 0 => format!("{sign}.{frac:02}"),
        _ => format!("{sign}{}E-3", a * 250),
    }
}

/// Text of `c` in a non-canonical but equivalent spelling: decimal grade values in mixed
/// notations, comments, blank lines, irregular spacing and optional CRLF line ends.
pub fn spelled_scc(c: &ChainComplex, seed: u64) -> String {
    let mut r = rng(seed);
    let eol = if r.gen_bool(0.3) { "\r\n" } else { "\n" };
    let mut lines: Vec<String> = vec!["scc2020".into(), "# generated".into(), " 2".into()];
    let k = c.length();
    lines.push((0..=k).rev().map(|n| c.level_size(n).to_string()).collect::<Vec<_>>().join("   "));
    for n in (0..=k).rev() {
        for (j, g) in c.level_grades(n).iter().enumerate() {
            let mut line = format!("{} {}", spell(g.x, r.gen()), spell(g.y, r.gen()));
            line.push_str(if r.gen_bool(0.5) { " ;" } else { ";" });
            for i in c.boundary_of(n, j).iter() {
                line.push_str(if r.gen_bool(0.2) { "\t" } else { " " });
                line.push_str(&i.to_string());
            }
            if r.gen_bool(0.1) {
                lines.push(String::new());
            }
            lines.push(line);
        }
    }
    let mut text = lines.join(eol);
    text.push_str(eol);
    text
}

/// Seeded complexes of mixed shapes: lower-star meshes, some inflated with local pairs,
/// and filled simplices of length 3.
pub fn corpus_complex(seed: u64) -> ChainComplex {
    match seed % 4 {
        0 | 1 => gen_lower_star(1 + (seed % 5) as usize, 1 + (seed / 5 % 4) as usize, seed),
        2 => inflate_with_local_pairs(&gen_lower_star(2, 2, seed), seed ^ 0x55, 6),
        _ => simplex_skeleton(5, 3, seed),
    }
}

/// All faces of dimension `≤ top` of the simplex on `vertices` vertices, lower-star graded
/// from random vertex grades in `0..6`; colex-sorted.
pub fn simplex_skeleton(vertices: usize, top: usize, seed: u64) -> ChainComplex {
    let mut r = rng(seed);
    let vg: Vec<Grade> = (0..vertices).map(|_| Grade::new(r.gen_range(0..6), r.gen_range(0..6))).collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![(0..vertices).map(|v| vec![v]).collect()];
    for d in 1..=top {
        let prev = &faces[d - 1];
        let mut next = Vec::new();
        for f in prev {
            for v in f.last().unwrap() + 1..vertices {
                let mut g = f.clone();
                g.push(v);
                next.push(g);
            }
        }
        faces.push(next);
    }
    let grade = |f: &Vec<usize>| f.iter().fold(Grade::new(0, 0), |a, &v| a.join(&vg[v]));
    let levels: Vec<Vec<Grade>> = faces.iter().map(|l| l.iter().map(grade).collect()).collect();
    let boundaries: Vec<Vec<SparseColumn>> = (1..=top)
        .map(|d| {
            faces[d]
                .iter()
                .map(|f| {
                    let idx = (0..f.len()).map(|skip| {
                        let mut g = f.clone();
                        g.remove(skip);
                        faces[d - 1].binary_search(&g).unwrap()
                    });
                    SparseColumn::from_indices(idx.collect())
                })
                .collect()
        })
        .collect();
    let mut all: Vec<Grade> = levels.iter().flatten().copied().collect();
    mpcompress_core::testkit::generators::rank_normalize(&mut all);
    let mut it = all.into_iter();
    let levels: Vec<Vec<Grade>> = levels.iter().map(|l| l.iter().map(|_| it.next().unwrap()).collect()).collect();
    ChainComplex::new(levels, boundaries).unwrap().colex_normalize().unwrap().0
}
