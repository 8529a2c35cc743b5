fn main() {
    std::process::exit(nashfan::cli::main_with_args(std::env::args_os()));
}
