"""Serializable settings of analyses, Monte-Carlo campaigns and mission runs."""
