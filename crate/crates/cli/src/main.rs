use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use planar_hull::oracle::{gen_instance, hull_naive, lp_max, parabola_polygon, Shape};
use planar_hull::{emit_hpoly, extreme, hull_with, normalize, parse_hpoly, Error, HPoly, HullOptions};

mod svg;

#[derive(Parser)]
#[command(name = "phull", version, about = "Exact convex hull of two planar polyhedra")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Smallest halfplane system containing both inputs.
    Hull {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Inputs are already normalized; pass them through unchanged.
        #[arg(long)]
        no_normalize: bool,
        /// Check the result against the brute-force reference.
        #[arg(long)]
        verify: bool,
        /// Draw inputs, result and bounding box to an SVG file.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Print the points (`P x y`) and rays (`R dx dy`) generating the input.
    Extreme { a: PathBuf },
    /// Drop redundant inequalities and sort by orientation.
    Normalize {
        a: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compare the hull of two inputs with the brute-force reference.
    Verify { a: PathBuf, b: PathBuf },
    /// Write a seeded random instance.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 16)]
        coeff_bound: i64,
        #[arg(long, default_value = "random")]
        shape: Shape,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Time the hull on convex polygons of growing size.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [4096, 8192, 16384, 32768])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Use the fast path that skips the orientation sort.
        #[arg(long)]
        presorted: bool,
    },
}

/// Failure with the process exit code it maps to.
struct Fail {
    code: u8,
    msg: String,
}

impl Fail {
    fn new(code: u8, msg: impl fmt::Display) -> Self {
        Fail { code, msg: msg.to_string() }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if e == Error::Unsatisfiable { 3 } else { 2 };
        Fail::new(code, e)
    }
}

type Outcome = Result<(), Fail>;

fn read(path: &Path) -> Result<HPoly, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail::new(2, format!("{}: {}", path.display(), e)))?;
    parse_hpoly(&text).map_err(|e| Fail::new(2, format!("{}: {}", path.display(), e)))
}

fn read_normalized(path: &Path) -> Result<HPoly, Fail> {
    normalize(&read(path)?).map_err(|e| match e {
        Error::Unsatisfiable => Fail::new(3, format!("{}: unsatisfiable", path.display())),
        e => e.into(),
    })
}

fn write(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fail::new(2, format!("{}: {}", p.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

/// An inequality of one system that the other violates, if any.
fn witness(h: &HPoly, reference: &HPoly) -> Option<String> {
    for f in reference.ineqs() {
        if !lp_max(h, &f.normal()).at_most(f.c()) {
            return Some(format!("result leaves the reference inequality {}", f));
        }
    }
    for f in h.ineqs() {
        if !lp_max(reference, &f.normal()).at_most(f.c()) {
            return Some(format!("reference leaves the result inequality {}", f));
        }
    }
    None
}

fn check(h: &HPoly, a: &HPoly, b: &HPoly) -> Outcome {
    let reference = hull_naive(a, b)?;
    match witness(h, &reference) {
        Some(w) => Err(Fail::new(1, format!("verification failed: {}", w))),
        None => Ok(()),
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Hull { a, b, out, no_normalize, verify, svg } => {
            let (a, b) = if no_normalize { (read(&a)?, read(&b)?) } else { (read_normalized(&a)?, read_normalized(&b)?) };
            let (h, _) = hull_with(&a, &b, &HullOptions::default())?;
            if let Some(path) = svg {
                let doc = svg::render(&a, &b, &h)?;
                fs::write(&path, doc).map_err(|e| Fail::new(2, format!("{}: {}", path.display(), e)))?;
            }
            write(out.as_deref(), &emit_hpoly(&h))?;
            if verify {
                check(&h, &a, &b)?;
            }
            Ok(())
        }
        Cmd::Extreme { a } => {
            let v = extreme(&read_normalized(&a)?, false)?;
            let mut text = String::new();
            for p in &v.points {
                text += &format!("P {} {}\n", p.x, p.y);
            }
            for r in &v.rays {
                text += &format!("R {} {}\n", r.dx, r.dy);
            }
            write(None, &text)
        }
        Cmd::Normalize { a, out } => write(out.as_deref(), &emit_hpoly(&read_normalized(&a)?)),
        Cmd::Verify { a, b } => {
            let (a, b) = (read_normalized(&a)?, read_normalized(&b)?);
            let (h, _) = hull_with(&a, &b, &HullOptions::default())?;
            check(&h, &a, &b)?;
            println!("ok: {} inequalities", h.len());
            Ok(())
        }
        Cmd::Gen { seed, n, coeff_bound, shape, out } => {
            if coeff_bound < 1 {
                return Err(Fail::new(2, "--coeff-bound must be at least 1"));
            }
            write(out.as_deref(), &emit_hpoly(&gen_instance(seed, n, coeff_bound, shape)))
        }
        Cmd::Bench { sizes, reps, presorted } => bench(&sizes, reps.max(1), presorted),
    }
}

fn bench(sizes: &[usize], reps: usize, presorted: bool) -> Outcome {
    if let Some(&n) = sizes.iter().find(|&&n| n < 6) {
        return Err(Fail::new(2, format!("size {} too small, need at least 6", n)));
    }
    let opts = HullOptions { assume_sorted: presorted, ..HullOptions::default() };
    println!("{:>8} {:>12} {:>8}", "n", "median ms", "ratio");
    let mut prev: Option<Duration> = None;
    for &n in sizes {
        let a = parabola_polygon(n / 2, 0);
        let b = parabola_polygon(n - n / 2, 1 + n as i64 / 4);
        let mut times = Vec::with_capacity(reps);
        for _ in 0..reps {
            let t = Instant::now();
            let (h, stats) = hull_with(&a, &b, &opts)?;
            times.push(t.elapsed());
            if presorted && stats.extreme_sorts != 0 {
                return Err(Fail::new(1, "presorted run sorted its input"));
            }
            std::hint::black_box(h);
        }
        times.sort();
        let med = times[times.len() / 2];
        let ratio = prev.map_or(String::from("-"), |p| format!("{:.2}", med.as_secs_f64() / p.as_secs_f64()));
        println!("{:>8} {:>12.2} {:>8}", n, med.as_secs_f64() * 1e3, ratio);
        prev = Some(med);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("phull: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
