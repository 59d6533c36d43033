"""Command-line entry points: the HTTP service and the stats harness."""

from __future__ import annotations

import csv
import json
import sys
from collections import defaultdict

import click

from .errors import UndefinedCorrelation
from .explanation import Thresholds
from .stats import PairedSample, binomial_ci, kendall_tau_b


@click.group(context_settings={"auto_envvar_prefix": "RECAST"})
def main():
    """Toxicity interrogation engine."""


@main.command()
@click.option("--port", default=8080, show_default=True)
@click.option("--lexicon", required=True, type=click.Path(exists=True))
@click.option("--embeddings", required=True, type=click.Path(exists=True))
@click.option("--corpus", required=True, type=click.Path(exists=True))
@click.option("--feedback-log", default="feedback.jsonl", show_default=True)
@click.option("--attn-cutoff", default=0.2, show_default=True)
@click.option("--alt-toxicity-max", default=0.4, show_default=True)
@click.option("--knn", default=10, show_default=True)
@click.option("--mlm-topk", default=20, show_default=True)
def serve(port, lexicon, embeddings, corpus, feedback_log, attn_cutoff, alt_toxicity_max, knn, mlm_topk):
    """Run the scoring/explanation HTTP service."""
    import uvicorn

    from .service import ServiceConfig, create_app

    config = ServiceConfig(
        lexicon=lexicon,
        embeddings=embeddings,
        corpus=corpus,
        feedback_log=feedback_log,
        port=port,
        thresholds=Thresholds(
            attn_cutoff=attn_cutoff,
            alt_toxicity_max=alt_toxicity_max,
            knn=knn,
            mlm_topk=mlm_topk,
        ),
    )
    uvicorn.run(create_app(config), host="0.0.0.0", port=port)


@main.command()
@click.argument("labels_file", type=click.Path(exists=True))
@click.option("--json-out", type=click.Path(), default=None, help="Also write a JSON report.")
def stats(labels_file, json_out):
    """Analyze an edit-labels file.

    Rows are `id, original_label, edit_label, condition` (comma- or
    tab-separated; a header row is skipped). Reports, per condition,
    the Kendall tau-b between original and edited labels and the 95%
    interval for the proportion of strictly improved edits.
    """
    by_condition: dict[str, list[PairedSample]] = defaultdict(list)
    with open(labels_file, encoding="utf-8", newline="") as fh:
        sample = fh.read(4096)
        fh.seek(0)
        dialect = csv.Sniffer().sniff(sample, delimiters=",\t") if sample.strip() else csv.excel
        for row in csv.reader(fh, dialect):
            if len(row) < 4 or not row[0].strip():
                continue
            try:
                original = float(row[1])
                edited = float(row[2])
            except ValueError:
                continue  # header row
            by_condition[row[3].strip()].append(PairedSample(x=original, y=edited))

    if not by_condition:
        click.echo("no usable rows found", err=True)
        sys.exit(1)

    report = {}
    for condition in sorted(by_condition):
        samples = by_condition[condition]
        entry: dict = {"n": len(samples)}
        try:
            tau = kendall_tau_b(samples)
            entry["tau_b"] = tau.tau
            entry["p_value"] = tau.p_value
            entry["concordant"] = tau.concordant
            entry["discordant"] = tau.discordant
        except UndefinedCorrelation:
            entry["tau_b"] = None
            entry["p_value"] = None
        improved = sum(1 for s in samples if s.y < s.x)
        low, high = binomial_ci(improved, len(samples))
        entry["improved_fraction"] = improved / len(samples)
        entry["improved_ci95"] = [low, high]
        report[condition] = entry

        click.echo(f"condition: {condition}  (n={entry['n']})")
        if entry["tau_b"] is None:
            click.echo("  tau-b: undefined (all pairs tied)")
        else:
            click.echo(f"  tau-b: {entry['tau_b']:+.4f}  (p={entry['p_value']:.4f}, approximate)")
        click.echo(
            f"  improved edits: {entry['improved_fraction']:.3f} "
            f"(95% CI [{low:.3f}, {high:.3f}])"
        )

    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
        click.echo(f"wrote {json_out}")


if __name__ == "__main__":
    main()
