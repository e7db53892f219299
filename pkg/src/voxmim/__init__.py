"""Masked-image-modeling pretraining for 3D volumes, desk scale.

Reconstruction-loss-guided masking with an EMA teacher-student loop, a
sparse hierarchical encoder-decoder built on a small numpy autograd, and
segmentation-probe evaluation (DSC / NSD) on synthetic phantom corpora.
"""

__version__ = "0.1.0"
