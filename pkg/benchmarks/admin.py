from django.contrib import admin

from .models import BenchmarkRun, TimingResult


class TimingResultInline(admin.TabularInline):
    model = TimingResult
    extra = 0
    readonly_fields = ['n_points', 'n_objectives', 'n_levels', 'trial', 'algorithm', 'time_ns', 'checksum']
    can_delete = False


@admin.register(BenchmarkRun)
class BenchmarkRunAdmin(admin.ModelAdmin):
    list_display = ['id', 'created_at', 'algorithms', 'trials', 'switch_enabled', 'd_interpretation', 'note']
    list_filter = ['created_at', 'switch_enabled', 'd_interpretation']
    search_fields = ['note', 'algorithms']
    readonly_fields = ['created_at']
    date_hierarchy = 'created_at'
    inlines = [TimingResultInline]


@admin.register(TimingResult)
class TimingResultAdmin(admin.ModelAdmin):
    list_display = ['run', 'algorithm', 'n_points', 'n_objectives', 'n_levels', 'trial', 'time_ns']
    list_filter = ['algorithm', 'n_objectives', 'n_levels']
    search_fields = ['checksum']
