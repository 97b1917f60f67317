import math

from closepair import Algo, BenchRecord, Metric, ratio_table, render_ratio_figure


def rows_for_figure():
    records = []
    for n, w2, w7 in ((1024, 80, 100), (2048, 170, 210), (4096, 360, 450)):
        for p in (1.0, 2.0, math.inf):
            for rep in range(2):
                for algo, wall in ((Algo.BASIC2, w2), (Algo.BASIC7, w7)):
                    records.append(
                        BenchRecord(
                            n=n,
                            algo=algo,
                            metric=Metric(p),
                            seed=0,
                            rep=rep,
                            wall_time_ns=wall * 1000,
                            distance_calls_total=n,
                            distance_calls_combine=n // 2,
                            result_dist=0.01,
                        )
                    )
    return ratio_table(records)


def test_render_ratio_figure_writes_png(tmp_path):
    out = tmp_path / "ratios.png"
    written = render_ratio_figure(rows_for_figure(), out)
    assert written == out
    assert out.exists()
    assert out.stat().st_size > 1000
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_render_ratio_figure_svg(tmp_path):
    out = tmp_path / "ratios.svg"
    render_ratio_figure(rows_for_figure(), out)
    assert b"<svg" in out.read_bytes()[:500]
