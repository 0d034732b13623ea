//! Drives the command-line front end in-process on the bundled session files.

use std::path::Path;

fn main() {
    let sessions = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/sessions");
    let file = |name: &str| sessions.join(name).to_string_lossy().into_owned();
    let runs: Vec<Vec<String>> = vec![
        vec!["gb".into(), "--input".into(), file("ideals.session"), "twisted".into(), "--order".into(), "lex".into()],
        vec!["transform".into(), "--input".into(), file("ideals.session"), "line".into(), "1".into()],
        vec!["derive".into(), "--input".into(), file("df.session"), "D".into(), "kernel".into(), "2".into()],
        vec!["derive".into(), "--input".into(), file("df.session"), "D".into(), "invariant".into(), "s".into()],
        vec!["quotient".into(), "--input".into(), file("quotient.session"), "cone".into(), "extend".into(), "y3".into(), "y1".into(), "1".into()],
        vec!["verify".into(), "df".into(), "--input".into(), file("corrupt_phi.session")],
    ];
    for args in runs {
        println!("$ quasiaffine {}", args.join(" "));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = quasiaffine::cli::run(std::iter::once("quasiaffine".to_string()).chain(args), &mut out, &mut err);
        let out = String::from_utf8_lossy(&out);
        let lines: Vec<&str> = out.lines().collect();
        // long reports are abbreviated to their tail
        for line in lines.iter().skip(lines.len().saturating_sub(8)) {
            println!("{line}");
        }
        for line in String::from_utf8_lossy(&err).lines() {
            println!("stderr: {line}");
        }
        println!("exit {code}\n");
    }
}
