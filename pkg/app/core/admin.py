"""
Django admin customization.
"""

from core import models

from django.contrib import admin


class SolveRunAdmin(admin.ModelAdmin):
    """Admin pages for stored runs."""

    ordering = ['-created']
    list_display = [
        'created', 'method', 'order', 'pair_type', 'seed', 'status',
        'total_s', 'ep_calls',
    ]
    list_filter = ['method', 'order', 'status']
    # Runs are written by the solve and bench commands only
    readonly_fields = [
        field.name for field in models.SolveRun._meta.fields
    ]


admin.site.register(models.SolveRun, SolveRunAdmin)
