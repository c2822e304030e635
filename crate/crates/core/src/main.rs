fn main() -> std::process::ExitCode {
    nahopf::cli::main_with_args(std::env::args_os())
}
