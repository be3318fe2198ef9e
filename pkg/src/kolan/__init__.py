"""kolan - Batch analytics for influencer (KOL) campaign effectiveness."""

__version__ = "0.1.0"
