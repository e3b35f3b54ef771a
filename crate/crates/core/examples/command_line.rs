//! Drive the command-line interface in process.
//!
//! cargo run --example command_line

use schottky_dim::cli::run;

fn main() {
    let config = concat!(env!("CARGO_MANIFEST_DIR"), "/configs/symmetric_pi6.json");
    let commands: [&[&str]; 4] = [
        &["check", config],
        &["dim", config, "--depth", "1", "--json"],
        &[
            "sweep",
            "--family",
            "symmetric",
            "--theta-min",
            "0.2",
            "--theta-max",
            "1.0",
            "--steps",
            "5",
            "--depth",
            "2",
        ],
        &["limit-set", config, "--depth", "2"],
    ];
    for args in commands {
        println!("$ schottky-dim {}", args.join(" "));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("schottky-dim").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        print!(
            "{}{}",
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        );
        println!("[exit {code}]\n");
    }
}
