"""
Cli for Finrag.
"""

import json
import logging
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import (
    Dict,
    Iterator,
    List,
    Optional
)
import questionary
import typer
from dotenv import load_dotenv
from rich import print
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from finrag import __version__
from finrag.cli.manifest import RunManifest
from finrag.config import (
    PipelineConfig,
    load_config
)
from finrag.corpus import (
    Corpus,
    ingest_jsonl
)
from finrag.errors import (
    FinragError,
    UsageError
)
from finrag.eval import (
    CONFIG_WITH_RERANK,
    CONFIG_WITHOUT_RERANK,
    AblationReport,
    compare_configs,
    load_dataset,
    render_table,
    run_evaluation,
    sample_groups,
    summary_lines,
    write_report
)
from finrag.pipeline import (
    FTS_FILE,
    VECTOR_FILE,
    Engine,
    build_indexes,
    save_indexes
)
from finrag.utils import sha256_file

RUN_MANIFEST_FILE = "run_manifest.json"

# typer may vendor its own click; match the exception types it actually raises
ClickException = next(cls for cls in typer.BadParameter.__mro__ if cls.__name__ == "ClickException")

app = typer.Typer(
    name="finrag",
    help="Finrag CLI - Hybrid retrieval, reranking and evaluation over financial reports"
)

err_console = Console(stderr=True)

@dataclass
class CliState:
    """
    Options shared by every command.
    """

    cfg: PipelineConfig
    seed: int
    config_path: Optional[Path] = None

@contextmanager
def _guard() -> Iterator[None]:
    """
    Print Finrag errors and exit with their status code.
    """

    try:
        yield
    except FinragError as exc:
        err_console.print(f"[red]Error:[/red] {escape(str(exc))}")
        raise typer.Exit(code=exc.EXIT_CODE)

def _configure_logging(
    verbose: bool,
    trace_http: bool
) -> None:
    level = logging.DEBUG if trace_http else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True
    )
    # request bodies are only logged with --trace-http
    for name in ("httpx", "httpcore"):
        logging.getLogger(name).setLevel(logging.DEBUG if trace_http else logging.WARNING)

def _state(ctx: typer.Context) -> CliState:
    return ctx.obj

def _index_hashes(index_dir: Path) -> Dict[str, str]:
    return {
        name: sha256_file(index_dir / name)
        for name in (FTS_FILE, VECTOR_FILE)
        if (index_dir / name).is_file()
    }

@app.command()
def ingest(
    ctx: typer.Context,
    corpus: Path = typer.Option(..., "--corpus", help="Line-delimited JSON documents"),
    out: Path = typer.Option(..., "--out", help="Chunk store directory to write"),
    html: bool = typer.Option(False, "--html", help="Strip HTML tags from every document before chunking")
) -> None:
    """
    Chunk a document collection into a chunk store.
    """

    state = _state(ctx)
    with _guard():
        result = ingest_jsonl(corpus, state.cfg.chunking, html=html)
        result.save(out)
        RunManifest.create(
            "ingest",
            state.cfg,
            state.seed,
            corpus_hash=result.corpus_hash(),
            extras={"source": str(corpus), "html": html}
        ).write(out / RUN_MANIFEST_FILE)
    print(
        f"[green]✔ Ingested {len(result.documents)} documents into "
        f"{len(result.chunks)} chunks at {escape(str(out))}[/green]"
    )

@app.command("build-index")
def build_index(
    ctx: typer.Context,
    store: Path = typer.Option(..., "--store", help="Chunk store directory"),
    out: Path = typer.Option(..., "--out", help="Index directory to write"),
    stub_gateways: bool = typer.Option(False, "--stub-gateways", help="Use the offline hashing embedder")
) -> None:
    """
    Build the keyword and vector indexes of a chunk store.
    """

    state = _state(ctx)
    with _guard():
        corpus = Corpus.load(store)
        fts, vectors = build_indexes(corpus, state.cfg, stub=stub_gateways)
        hashes = save_indexes(fts, vectors, out)
        RunManifest.create(
            "build-index",
            state.cfg,
            state.seed,
            corpus_hash=corpus.corpus_hash(),
            index_hashes=hashes,
            extras={"stub_gateways": stub_gateways}
        ).write(out / RUN_MANIFEST_FILE)
    print(
        f"[green]✔ Indexed {len(fts)} chunks "
        f"({vectors.dim}-dim vectors) at {escape(str(out))}[/green]"
    )

def _answer(
    engine: Engine,
    question: str,
    no_rerank: bool,
    trace: bool
) -> None:
    answer, query_trace = engine.answer_query(question, enable_rerank=not no_rerank)
    typer.echo(answer)
    if trace:
        typer.echo(json.dumps(query_trace.to_dict(), indent=2, ensure_ascii=False, sort_keys=True))

@app.command()
def query(
    ctx: typer.Context,
    question: Optional[str] = typer.Argument(None, help="Question; omit for interactive mode"),
    store: Path = typer.Option(Path("store"), "--store", help="Chunk store directory"),
    index: Path = typer.Option(Path("index"), "--index", help="Index directory"),
    no_rerank: bool = typer.Option(False, "--no-rerank", help="Skip reranking and keep the top fused chunks"),
    trace: bool = typer.Option(False, "--trace", help="Print the stage-by-stage trace as JSON"),
    stub_gateways: bool = typer.Option(False, "--stub-gateways", help="Use the offline stubs for every model")
) -> None:
    """
    Answer a question, or start an interactive session.
    """

    state = _state(ctx)
    with _guard():
        engine = Engine.from_artifacts(store, index, state.cfg, stub=stub_gateways)
        if question is not None:
            _answer(engine, question, no_rerank, trace)
            return

        while True:
            asked = questionary.text("Ask a question (empty to exit):", qmark="?").ask()
            if asked is None or not asked.strip():
                print("\n[yellow]Exiting.[/yellow]")
                raise typer.Exit(code=0)
            _answer(engine, asked, no_rerank, trace)

def _evaluate(
    state: CliState,
    command: str,
    configs: List[bool],
    dataset: Path,
    store: Path,
    index: Path,
    out: Path,
    groups: int,
    group_size: int,
    dataset_format: str,
    stub_gateways: bool
) -> None:
    records = load_dataset(dataset, dataset_format)
    grouped = sample_groups(records, groups, group_size, state.seed)
    engine = Engine.from_artifacts(store, index, state.cfg, stub=stub_gateways)

    results = {}
    for enable_rerank in configs:
        result = run_evaluation(engine, grouped, enable_rerank)
        results[result.config] = result
    comparison = None
    if CONFIG_WITH_RERANK in results and CONFIG_WITHOUT_RERANK in results:
        comparison = compare_configs(results[CONFIG_WITH_RERANK], results[CONFIG_WITHOUT_RERANK])
    report = AblationReport(results=results, comparison=comparison)

    manifest = RunManifest.create(
        command,
        state.cfg,
        state.seed,
        corpus_hash=engine.corpus.corpus_hash(),
        index_hashes=_index_hashes(index),
        extras={
            "dataset": str(dataset),
            "dataset_sha256": sha256_file(dataset),
            "n_groups": groups,
            "group_size": group_size,
            "excluded": report.excluded,
            "stub_gateways": stub_gateways
        }
    )
    write_report(report, out, manifest.to_dict())

    print(render_table(report))
    for line in summary_lines(report):
        print(escape(line))
    print(f"[green]✔ Wrote results to {escape(str(out))}[/green]")

@app.command("eval")
def eval_command(
    ctx: typer.Context,
    dataset: Path = typer.Option(..., "--dataset", help="Line-delimited benchmark queries"),
    store: Path = typer.Option(Path("store"), "--store", help="Chunk store directory"),
    index: Path = typer.Option(Path("index"), "--index", help="Index directory"),
    out: Path = typer.Option(Path("eval_out"), "--out", help="Directory for scores, traces and manifest"),
    groups: int = typer.Option(5, "--groups", min=1, help="Number of sampled groups"),
    group_size: int = typer.Option(300, "--group-size", min=1, help="Queries per group"),
    dataset_format: str = typer.Option("auto", "--format", help="Dataset layout: auto, plain or finder"),
    no_rerank: bool = typer.Option(False, "--no-rerank", help="Evaluate the configuration without reranking"),
    stub_gateways: bool = typer.Option(False, "--stub-gateways", help="Use the offline stubs for every model")
) -> None:
    """
    Evaluate one configuration on sampled query groups.
    """

    with _guard():
        _evaluate(
            _state(ctx), "eval", [not no_rerank], dataset, store, index, out,
            groups, group_size, dataset_format, stub_gateways
        )

@app.command()
def ablate(
    ctx: typer.Context,
    dataset: Path = typer.Option(..., "--dataset", help="Line-delimited benchmark queries"),
    store: Path = typer.Option(Path("store"), "--store", help="Chunk store directory"),
    index: Path = typer.Option(Path("index"), "--index", help="Index directory"),
    out: Path = typer.Option(Path("ablation_out"), "--out", help="Directory for scores, traces and manifest"),
    groups: int = typer.Option(5, "--groups", min=1, help="Number of sampled groups"),
    group_size: int = typer.Option(300, "--group-size", min=1, help="Queries per group"),
    dataset_format: str = typer.Option("auto", "--format", help="Dataset layout: auto, plain or finder"),
    stub_gateways: bool = typer.Option(False, "--stub-gateways", help="Use the offline stubs for every model")
) -> None:
    """
    Evaluate with and without reranking on the same groups and compare.
    """

    with _guard():
        _evaluate(
            _state(ctx), "ablate", [True, False], dataset, store, index, out,
            groups, group_size, dataset_format, stub_gateways
        )

def _version_callback(value: bool) -> None:
    """
    Show the finrag version and exit.
    """

    if value:
        print(f"finrag {__version__}")
        raise typer.Exit()

@app.callback()
def main_callback(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(None, "--config", help="JSON config file; defaults apply when omitted"),
    seed: int = typer.Option(0, "--seed", help="Seed for query sampling"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress"),
    trace_http: bool = typer.Option(False, "--trace-http", help="Log every request and response (keys redacted)"),
    version: bool = typer.Option(
        False,
        "--version",
        help="Show version and exit",
        is_eager=True,
        callback=_version_callback
    )
) -> None:
    """
    Main cli callback.
    """

    load_dotenv()
    _configure_logging(verbose, trace_http)
    with _guard():
        ctx.obj = CliState(cfg=load_config(config), seed=seed, config_path=config)

def main(
    argv: Optional[List[str]] = None
) -> None:
    """
    Main entry point for the CLI.

    Usage errors exit with status 1; Finrag errors with their own status.
    """

    try:
        code = app(args=argv, prog_name="finrag", standalone_mode=False)
    except typer.Abort:
        err_console.print("[yellow]Aborted.[/yellow]")
        code = UsageError.EXIT_CODE
    except ClickException as exc:
        error = UsageError(exc.format_message())
        err_console.print(f"[red]{escape(str(error))}[/red]")
        code = error.EXIT_CODE
    raise SystemExit(code if isinstance(code, int) else 0)

if __name__ == "__main__":
    main()
