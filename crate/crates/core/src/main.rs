use std::process::ExitCode;

fn main() -> ExitCode {
    let out = knotoid::cli::run(std::env::args_os());
    if out.code == 0 {
        print!("{}", out.text);
    } else {
        eprint!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}
