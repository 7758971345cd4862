use std::ffi::OsString;

fn main() {
    let argv: Vec<OsString> = std::env::args_os().collect();
    let (output, code) = cyclonomy_cli::execute(&argv);
    println!("{output}");
    std::process::exit(code);
}
