from .context import RON, TSUMO, NoYakuError, WinContext, YakuList
from .dora import count_dora, count_dora_parts
from .fu import compute_fu
from .points import Settlement, base_points, ceil100, settle
from .score import WinScore, score_win
from .yaku import YAKU_BY_ID, YakuId, detect_yaku, yaku_name

__all__ = [
    "NoYakuError",
    "RON",
    "Settlement",
    "TSUMO",
    "WinContext",
    "WinScore",
    "YAKU_BY_ID",
    "YakuId",
    "YakuList",
    "base_points",
    "ceil100",
    "compute_fu",
    "count_dora",
    "count_dora_parts",
    "detect_yaku",
    "score_win",
    "settle",
    "yaku_name",
]
